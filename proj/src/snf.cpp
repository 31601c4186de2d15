#include "pomo/snf.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pomo/errors.hpp"

namespace pomo {

void IntMatrix::set(int r, int c, Integer v) {
    auto& col = columns[c];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
        if (v == 0)
            col.erase(it);
        else
            it->second = std::move(v);
    } else if (v != 0) {
        col.insert(it, {r, std::move(v)});
    }
}

Integer IntMatrix::at(int r, int c) const {
    for (const auto& [row, v] : columns[c])
        if (row == r) return v;
    return 0;
}

bool IntMatrix::is_zero() const {
    for (const auto& col : columns)
        if (!col.empty()) return false;
    return true;
}

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols != B.rows) fail(ErrorKind::DimensionOutOfRange, "matrix shapes do not compose");
    IntMatrix C(A.rows, B.cols);
    for (int j = 0; j < B.cols; ++j) {
        std::map<int, Integer> acc;
        for (const auto& [k, bv] : B.columns[j])
            for (const auto& [i, av] : A.columns[k]) acc[i] += av * bv;
        for (auto& [i, v] : acc)
            if (v != 0) C.columns[j].emplace_back(i, std::move(v));
    }
    return C;
}

IntMatrix boundary_matrix(const SimplicialComplex& L, int d) {
    if (d < 0 || d > L.dimension())
        fail(ErrorKind::DimensionOutOfRange, "no boundary map in dimension " + std::to_string(d));

    if (d == 0) {
        // augmentation: every vertex maps to the generator of the point
        IntMatrix M(1, static_cast<int>(L.count_in_dim(0)));
        for (int c = 0; c < M.cols; ++c) M.columns[c].emplace_back(0, 1);
        return M;
    }

    const auto& lower = L.simplices_of_dim(d - 1);
    const auto& upper = L.simplices_of_dim(d);
    std::map<Simplex, int> row_of;
    for (int i = 0; i < static_cast<int>(lower.size()); ++i) row_of.emplace(lower[i], i);

    IntMatrix M(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    for (int c = 0; c < static_cast<int>(upper.size()); ++c) {
        const Simplex& s = upper[c];
        std::vector<std::pair<int, Integer>> entries;
        for (int i = 0; i <= d; ++i) {
            Simplex face;
            face.reserve(d);
            for (int k = 0; k <= d; ++k)
                if (k != i) face.push_back(s[k]);
            entries.emplace_back(row_of.at(face), (i % 2 == 0) ? 1 : -1);
        }
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        M.columns[c] = std::move(entries);
    }
    return M;
}

std::vector<Integer> SmithSummary::torsion() const {
    std::vector<Integer> out;
    for (const auto& f : invariant_factors)
        if (f > 1) out.push_back(f);
    return out;
}

namespace {

// Classical dense SNF on the small residual left after unit-pivot
// elimination. Entries are exact; the divisibility chain is enforced by
// re-absorbing rows whose entries the pivot does not divide.
std::vector<Integer> dense_snf(std::vector<std::vector<Integer>> a) {
    std::vector<Integer> factors;
    int R = static_cast<int>(a.size());
    int C = R ? static_cast<int>(a[0].size()) : 0;
    int t = 0;

    auto nonzero_exists = [&](int from) {
        for (int i = from; i < R; ++i)
            for (int j = from; j < C; ++j)
                if (a[i][j] != 0) return true;
        return false;
    };

    while (t < R && t < C && nonzero_exists(t)) {
        // smallest |value| pivot to keep growth down
        int pi = -1, pj = -1;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j)
                if (a[i][j] != 0 &&
                    (pi < 0 || boost::multiprecision::abs(a[i][j]) <
                                   boost::multiprecision::abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        std::swap(a[t], a[pi]);
        for (int i = 0; i < R; ++i) std::swap(a[i][t], a[i][pj]);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (int i = t + 1; i < R; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                for (int j = t; j < C; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {  // remainder strictly smaller: promote it
                    std::swap(a[t], a[i]);
                    settled = false;
                }
            }
            for (int j = t + 1; j < C; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                for (int i = t; i < R; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (int i = 0; i < R; ++i) std::swap(a[i][t], a[i][j]);
                    settled = false;
                }
            }
            if (!settled) continue;
            // pivot must divide the rest of the submatrix
            for (int i = t + 1; i < R && settled; ++i)
                for (int j = t + 1; j < C && settled; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (int k = t; k < C; ++k) a[t][k] += a[i][k];
                        settled = false;
                    }
        }
        factors.push_back(boost::multiprecision::abs(a[t][t]));
        ++t;
    }
    return factors;
}

}  // namespace

SmithSummary smith_normal_form(const IntMatrix& M) {
    // row-major working copy with per-column occupancy for pivot search
    std::vector<std::map<int, Integer>> row(M.rows);
    std::vector<std::set<int>> col_rows(M.cols);
    for (int c = 0; c < M.cols; ++c)
        for (const auto& [r, v] : M.columns[c]) {
            row[r].emplace(c, v);
            col_rows[c].insert(r);
        }

    std::vector<bool> row_done(M.rows, false), col_done(M.cols, false);
    int unit_rank = 0;

    while (true) {
        // best remaining unit pivot by Markowitz fill estimate
        int best_r = -1, best_c = -1;
        long long best_score = -1;
        for (int r = 0; r < M.rows; ++r) {
            if (row_done[r] || row[r].empty()) continue;
            for (const auto& [c, v] : row[r]) {
                if (col_done[c]) continue;
                if (v != 1 && v != -1) continue;
                long long score = static_cast<long long>(row[r].size() - 1) *
                                  static_cast<long long>(col_rows[c].size() - 1);
                if (best_r < 0 || score < best_score) {
                    best_r = r;
                    best_c = c;
                    best_score = score;
                }
                if (best_score == 0) break;
            }
            if (best_score == 0) break;
        }
        if (best_r < 0) break;

        const Integer pivot = row[best_r].at(best_c);
        std::vector<int> targets(col_rows[best_c].begin(), col_rows[best_c].end());
        for (int r : targets) {
            if (r == best_r || row_done[r]) continue;
            auto it = row[r].find(best_c);
            if (it == row[r].end()) continue;
            Integer factor = it->second * pivot;  // pivot is +-1
            for (const auto& [c, v] : row[best_r]) {
                if (col_done[c]) continue;
                auto jt = row[r].find(c);
                if (jt == row[r].end()) {
                    Integer nv = -factor * v;
                    if (nv != 0) {
                        row[r].emplace(c, std::move(nv));
                        col_rows[c].insert(r);
                    }
                } else {
                    jt->second -= factor * v;
                    if (jt->second == 0) {
                        row[r].erase(jt);
                        col_rows[c].erase(r);
                    }
                }
            }
        }
        for (const auto& [c, v] : row[best_r]) col_rows[c].erase(best_r);
        row_done[best_r] = true;
        col_done[best_c] = true;
        row[best_r].clear();
        ++unit_rank;
    }

    // residual (no unit entries left) -> dense classical pass
    std::vector<int> live_rows, live_cols;
    std::vector<bool> col_live(M.cols, false);
    for (int r = 0; r < M.rows; ++r)
        if (!row_done[r] && !row[r].empty()) live_rows.push_back(r);
    for (int r : live_rows)
        for (const auto& [c, v] : row[r])
            if (!col_done[c] && !col_live[c]) col_live[c] = true;
    for (int c = 0; c < M.cols; ++c)
        if (col_live[c]) live_cols.push_back(c);

    std::vector<Integer> residual_factors;
    if (!live_rows.empty()) {
        std::map<int, int> col_pos;
        for (int i = 0; i < static_cast<int>(live_cols.size()); ++i) col_pos[live_cols[i]] = i;
        std::vector<std::vector<Integer>> dense(live_rows.size(),
                                                std::vector<Integer>(live_cols.size(), 0));
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : row[live_rows[i]])
                if (col_pos.count(c)) dense[i][col_pos[c]] = v;
        residual_factors = dense_snf(std::move(dense));
    }

    SmithSummary out;
    out.rank = unit_rank + static_cast<int>(residual_factors.size());
    out.invariant_factors.assign(static_cast<std::size_t>(unit_rank), Integer(1));
    out.invariant_factors.insert(out.invariant_factors.end(), residual_factors.begin(),
                                 residual_factors.end());
    // enforce d_1 | d_2 | ... (the dense pass yields it per block; a sweep
    // makes it global and is cheap at this size)
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < out.invariant_factors.size(); ++i) {
            Integer &x = out.invariant_factors[i], &y = out.invariant_factors[i + 1];
            if (y % x != 0) {
                Integer g = boost::multiprecision::gcd(x, y);
                Integer l = x / g * y;
                x = g;
                y = l;
                changed = true;
            }
        }
    }
    return out;
}

}  // namespace pomo
