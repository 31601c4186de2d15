#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pomo/morse.hpp"
#include "pomo/poset.hpp"

namespace pomo {

// Parsed .poset file. Line-oriented, UTF-8, '#' comments:
//   p <id> [f=<rational>]     element declaration, optional Morse value
//   rel <a> <b>               a < b (any valid strict-order pair)
//   m <a> <b>                 matching edge on a cover a < b
//   A <id> [<id> ...]         down-set membership for relative mode
struct PosetDocument {
    std::string name;  // basename without extension, or "<input>"
    Poset poset;
    std::optional<MorseFunction> values;  // present iff any f= was given
    Matching matching;
    std::vector<int> down_set;  // sorted; meaningful iff has_down_set
    bool has_down_set = false;

    // Values are validated at parse time on X, or on the complement of A
    // when the values cover exactly that.
    bool values_total_on(const std::vector<int>& domain) const;
};

PosetDocument parse_document(const std::string& text, const std::string& name = "<input>");
PosetDocument load_document(const std::string& path);

// Canonical form: p lines in display order, rel lines listing covers only,
// m and A lines sorted by display order. parse(serialize(d)) == d.
std::string serialize(const PosetDocument& doc);

}  // namespace pomo
