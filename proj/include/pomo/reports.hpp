#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "pomo/document.hpp"

namespace pomo {

struct CommandOptions {
    Mode mode = Mode::Strict;
    long long budget = 100000;
    std::uint64_t seed = 0;
    bool use_height = false;  // ignore file f-values
    bool relative = false;    // use A marks
    int restarts = 32;
    int limit = 12;
};

// Exit codes: 0 accepted / ok, 2 rejected with reasons, 1 error.
struct CommandResult {
    nlohmann::json data;   // structured report; mirrors the text field-for-field
    std::string text;
    int exit_code = 0;

    CommandResult();
    CommandResult(const CommandResult&);
    CommandResult(CommandResult&&) noexcept;
    CommandResult& operator=(const CommandResult&);
    CommandResult& operator=(CommandResult&&) noexcept;
    ~CommandResult();
};

CommandResult cmd_validate(const PosetDocument& doc, const CommandOptions& opt);
CommandResult cmd_critical(const PosetDocument& doc, const CommandOptions& opt);
CommandResult cmd_filtration(const PosetDocument& doc, const CommandOptions& opt);
CommandResult cmd_homology(const PosetDocument& doc, const CommandOptions& opt);
CommandResult cmd_descending_link(const PosetDocument& doc, const std::string& element,
                                  const CommandOptions& opt);
CommandResult cmd_hregular(const PosetDocument& doc, const CommandOptions& opt);
CommandResult cmd_join(const PosetDocument& left, const PosetDocument& right,
                       const CommandOptions& opt);
CommandResult cmd_opposite(const PosetDocument& doc, const CommandOptions& opt);
CommandResult cmd_search(const PosetDocument& doc, const CommandOptions& opt);
CommandResult cmd_exhaustive(const PosetDocument& doc, const CommandOptions& opt);

}  // namespace pomo
