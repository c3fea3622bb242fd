#include "involab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace involab {

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int v : vals_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("Permutation: entries must be a bijection on {1..n}");
        seen[v] = true;
    }
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> vals;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("Permutation::parse: bad entry '" + tok + "'");
            vals.push_back(v);
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("Permutation::parse: bad character in one-line notation");
            vals.push_back(ch - '0');
        }
    }
    return Permutation(std::move(vals));
}

Permutation Permutation::pattern_of(const std::vector<int>& entries) {
    const int n = static_cast<int>(entries.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return entries[a] < entries[b]; });
    std::vector<int> vals(n);
    for (int rank = 0; rank < n; ++rank) vals[idx[rank]] = rank + 1;
    return Permutation(std::move(vals));
}

Permutation Permutation::identity(int n) {
    std::vector<int> vals(n);
    std::iota(vals.begin(), vals.end(), 1);
    return Permutation(std::move(vals));
}

Permutation Permutation::decreasing(int n) {
    std::vector<int> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = n - i;
    return Permutation(std::move(vals));
}

std::string Permutation::str() const {
    std::ostringstream out;
    const bool compact = size() <= 9;
    for (int i = 0; i < size(); ++i) {
        if (!compact && i > 0) out << ',';
        out << vals_[i];
    }
    return out.str();
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.vals_ <=> b.vals_;
}

namespace {

// Backtracking matcher: match sigma's entries in position order; a candidate
// value must fall in the window forced by the already-matched entries.
bool match_from(const std::vector<int>& pi, const std::vector<int>& sigma,
                std::vector<int>& chosen_vals, size_t role, size_t from) {
    const size_t k = sigma.size();
    if (role == k) return true;
    for (size_t p = from; p + (k - role - 1) < pi.size(); ++p) {
        const int v = pi[p];
        bool feasible = true;
        for (size_t s = 0; s < role; ++s) {
            if ((v > chosen_vals[s]) != (sigma[role] > sigma[s])) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;
        chosen_vals[role] = v;
        if (match_from(pi, sigma, chosen_vals, role + 1, p + 1)) return true;
    }
    return false;
}

}  // namespace

bool contains(const Permutation& pi, const Permutation& sigma) {
    if (sigma.empty()) return true;
    if (sigma.size() > pi.size()) return false;
    std::vector<int> chosen(sigma.size());
    return match_from(pi.values(), sigma.values(), chosen, 0, 0);
}

bool avoids_all(const Permutation& pi, const std::vector<Permutation>& basis) {
    for (const auto& b : basis)
        if (contains(pi, b)) return false;
    return true;
}

Permutation inverse(const Permutation& pi) {
    std::vector<int> inv(pi.size());
    for (int i = 1; i <= pi.size(); ++i) inv[pi(i) - 1] = i;
    return Permutation(std::move(inv));
}

bool is_involution(const Permutation& pi) {
    for (int i = 1; i <= pi.size(); ++i)
        if (pi(pi(i)) != i) return false;
    return true;
}

Permutation direct_sum(const Permutation& sigma, const Permutation& tau) {
    std::vector<int> vals;
    vals.reserve(sigma.size() + tau.size());
    for (int v : sigma.values()) vals.push_back(v);
    for (int v : tau.values()) vals.push_back(v + sigma.size());
    return Permutation(std::move(vals));
}

Permutation skew_sum(const Permutation& sigma, const Permutation& tau) {
    std::vector<int> vals;
    vals.reserve(sigma.size() + tau.size());
    for (int v : sigma.values()) vals.push_back(v + tau.size());
    for (int v : tau.values()) vals.push_back(v);
    return Permutation(std::move(vals));
}

bool sum_decomposable(const Permutation& pi) {
    int mx = 0;
    for (int i = 1; i < pi.size(); ++i) {
        mx = std::max(mx, pi(i));
        if (mx == i) return true;
    }
    return false;
}

bool skew_decomposable(const Permutation& pi) {
    const int n = pi.size();
    int mn = n + 1;
    for (int i = 1; i < n; ++i) {
        mn = std::min(mn, pi(i));
        if (mn == n - i + 1) return true;
    }
    return false;
}

Permutation inflate(const Permutation& sigma, const std::vector<Permutation>& parts) {
    const int m = sigma.size();
    if (static_cast<int>(parts.size()) != m)
        throw std::invalid_argument("inflate: arity mismatch between sigma and parts");
    for (const auto& p : parts)
        if (p.empty()) throw std::invalid_argument("inflate: empty part");
    // Value offset of part i: total length of parts whose sigma-entry is smaller.
    std::vector<int> offset(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (sigma(j + 1) < sigma(i + 1)) offset[i] += parts[j].size();
    std::vector<int> vals;
    for (int i = 0; i < m; ++i)
        for (int v : parts[i].values()) vals.push_back(v + offset[i]);
    return Permutation(std::move(vals));
}

bool is_simple(const Permutation& pi) {
    const int n = pi.size();
    if (n < 2) return false;
    for (int i = 1; i <= n; ++i) {
        int lo = pi(i), hi = pi(i);
        for (int j = i + 1; j <= n; ++j) {
            lo = std::min(lo, pi(j));
            hi = std::max(hi, pi(j));
            const int len = j - i + 1;
            if (len == n) break;
            if (hi - lo + 1 == len) return false;  // proper interval [i, j]
        }
    }
    return true;
}

namespace {

Permutation slice_pattern(const Permutation& pi, int from, int to) {
    std::vector<int> entries;
    entries.reserve(to - from + 1);
    for (int i = from; i <= to; ++i) entries.push_back(pi(i));
    return Permutation::pattern_of(entries);
}

}  // namespace

Decomposition decompose(const Permutation& pi) {
    const int n = pi.size();
    if (n < 2) throw std::invalid_argument("decompose: length must be at least 2");
    // Sum layer: split off the leftmost sum-indecomposable component.
    {
        int mx = 0;
        for (int i = 1; i < n; ++i) {
            mx = std::max(mx, pi(i));
            if (mx == i)
                return Decomposition{Permutation{1, 2},
                                     {slice_pattern(pi, 1, i), slice_pattern(pi, i + 1, n)}};
        }
    }
    // Skew layer, symmetric.
    {
        int mn = n + 1;
        for (int i = 1; i < n; ++i) {
            mn = std::min(mn, pi(i));
            if (mn == n - i + 1)
                return Decomposition{Permutation{2, 1},
                                     {slice_pattern(pi, 1, i), slice_pattern(pi, i + 1, n)}};
        }
    }
    // Simple root: contract the maximal proper intervals. For a permutation
    // that is neither sum nor skew decomposable these are pairwise disjoint.
    std::vector<std::pair<int, int>> maximal;
    for (int i = 1; i <= n; ++i) {
        int lo = pi(i), hi = pi(i);
        std::pair<int, int> best{i, i};
        for (int j = i + 1; j <= n; ++j) {
            lo = std::min(lo, pi(j));
            hi = std::max(hi, pi(j));
            const int len = j - i + 1;
            if (len < n && hi - lo + 1 == len) best = {i, j};
        }
        if (best.second > best.first) maximal.push_back(best);
    }
    // Drop intervals contained in a longer one starting earlier.
    std::vector<std::pair<int, int>> blocks;
    int covered_to = 0;
    for (int i = 1; i <= n; ++i) {
        if (i <= covered_to) continue;
        std::pair<int, int> block{i, i};
        for (const auto& [a, b] : maximal)
            if (a == i) block = {a, b};
        blocks.push_back(block);
        covered_to = block.second;
    }
    std::vector<int> reps;
    std::vector<Permutation> parts;
    for (const auto& [a, b] : blocks) {
        reps.push_back(pi(a));
        parts.push_back(slice_pattern(pi, a, b));
    }
    Decomposition d{Permutation::pattern_of(reps), std::move(parts)};
    if (!is_simple(d.root) || inflate(d.root, d.parts) != pi)
        throw std::logic_error("decompose: contraction did not produce a simple root");
    return d;
}

StatProfile stats(const Permutation& pi) {
    StatProfile s;
    const int n = pi.size();
    int run_min = n + 1;
    for (int i = 1; i <= n; ++i) {
        if (pi(i) == i) ++s.fp;
        if (pi(i) < run_min) {
            run_min = pi(i);
            ++s.lrmin;
        }
    }
    int run_max = 0;
    for (int i = n; i >= 1; --i) {
        if (pi(i) > run_max) {
            run_max = pi(i);
            ++s.rlmax;
        }
    }
    return s;
}

Gridding greedy_gridding(const Permutation& pi) {
    if (contains(pi, Permutation{1, 2, 3}))
        throw std::domain_error("greedy_gridding: permutation contains 123");
    Gridding g;
    const int n = pi.size();
    if (n == 0) return g;

    std::vector<int> remaining;  // positions, ascending
    int prefix_end = 1;
    while (prefix_end < n && pi(prefix_end + 1) < pi(prefix_end)) ++prefix_end;
    std::vector<int> first;
    for (int i = 1; i <= prefix_end; ++i) first.push_back(i);
    for (int i = prefix_end + 1; i <= n; ++i) remaining.push_back(i);
    int min_value = pi(prefix_end);
    g.cells.push_back(std::move(first));

    bool eastward = true;
    while (!remaining.empty()) {
        std::vector<int> cell;
        std::vector<int> rest;
        if (eastward) {
            // Entries above the smallest included value. For a 123-avoider
            // these form a decreasing sequence.
            int prev = n + 1;
            for (int p : remaining) {
                if (pi(p) > min_value) {
                    if (pi(p) >= prev) throw std::logic_error("greedy_gridding: eastward cell not decreasing");
                    prev = pi(p);
                    cell.push_back(p);
                } else {
                    rest.push_back(p);
                }
            }
        } else {
            // Longest decreasing prefix of what is left.
            size_t t = 0;
            while (t < remaining.size() &&
                   (t == 0 || pi(remaining[t]) < pi(remaining[t - 1])))
                ++t;
            cell.assign(remaining.begin(), remaining.begin() + t);
            rest.assign(remaining.begin() + t, remaining.end());
            min_value = std::min(min_value, pi(cell.back()));
        }
        if (cell.empty()) throw std::logic_error("greedy_gridding: stuck with entries remaining");
        g.cells.push_back(std::move(cell));
        remaining = std::move(rest);
        eastward = !eastward;
    }
    return g;
}

}  // namespace involab
