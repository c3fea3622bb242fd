#include "involab/coloring.hpp"

#include "involab/enumerate.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace involab {

ColoredPerm color_1324(const Permutation& pi) {
    if (contains(pi, Permutation{1, 3, 2, 4}))
        throw std::domain_error("color_1324: permutation contains 1324");
    const int n = pi.size();
    std::vector<EntryColor> colors(n, EntryColor::Red);
    std::vector<int> red_vals;  // values of red entries so far, in position order
    for (int i = 1; i <= n; ++i) {
        const int v = pi(i);
        // Red unless v would be the '2' of a red 132: some red a < v placed
        // before some red b > v.
        bool makes_132 = false;
        int best_low = 0;  // largest red value below v seen so far
        for (int rv : red_vals) {
            if (rv < v && rv > best_low) best_low = rv;
            if (rv > v && best_low > 0) {
                makes_132 = true;
                break;
            }
        }
        if (makes_132) {
            colors[i - 1] = EntryColor::Blue;
        } else {
            red_vals.push_back(v);
        }
    }
    // Right-to-left maxima are forced blue; the blue entries still avoid 213.
    int run_max = 0;
    for (int i = n; i >= 1; --i) {
        if (pi(i) > run_max) {
            run_max = pi(i);
            colors[i - 1] = EntryColor::Blue;
        }
    }
    return {pi, std::move(colors)};
}

LabelWordPair encode(const Permutation& pi) {
    const ColoredPerm cp = color_1324(pi);
    const int n = pi.size();
    std::vector<bool> lrmin(n + 1, false), rlmax(n + 1, false);
    int run_min = n + 1;
    for (int i = 1; i <= n; ++i)
        if (pi(i) < run_min) {
            run_min = pi(i);
            lrmin[i] = true;
        }
    int run_max = 0;
    for (int i = n; i >= 1; --i)
        if (pi(i) > run_max) {
            run_max = pi(i);
            rlmax[i] = true;
        }
    std::string by_position(n, '?');
    for (int i = 1; i <= n; ++i) {
        const bool red = cp.colors[i - 1] == EntryColor::Red;
        by_position[i - 1] = red ? (lrmin[i] ? 'a' : 'b') : (rlmax[i] ? 'd' : 'c');
    }
    std::string by_value(n, '?');
    const Permutation inv = inverse(pi);
    for (int val = 1; val <= n; ++val) by_value[val - 1] = by_position[inv(val) - 1];
    return {std::move(by_position), std::move(by_value)};
}

std::string EncodingReport::to_json() const {
    std::ostringstream out;
    out << "{\"n\":" << n << ",\"avoider_count\":\"" << avoider_count.get_str()
        << "\",\"distinct_pairs\":\"" << distinct_pairs.get_str() << "\",\"violations\":[";
    for (size_t i = 0; i < violations.size(); ++i) {
        if (i) out << ',';
        out << '"' << violations[i] << '"';
    }
    out << "]}";
    return out.str();
}

EncodingReport verify_encoding(int n) {
    if (n < 1) throw std::invalid_argument("verify_encoding: n must be positive");
    EncodingReport rep;
    rep.n = n;
    std::map<std::pair<std::string, std::string>, int> seen;
    for_each_avoiding_involution({Permutation{1, 3, 2, 4}}, n, [&](const Permutation& p) {
        rep.avoider_count += 1;
        const LabelWordPair w = encode(p);
        if (w.e.find("cb") != std::string::npos || w.v.find("cb") != std::string::npos)
            rep.violations.push_back("cb factor: " + p.str());
        for (int i = 0; i < n; ++i) {
            const bool a_match = (w.e[i] == 'a') == (w.v[i] == 'a');
            const bool d_match = (w.e[i] == 'd') == (w.v[i] == 'd');
            if (!a_match || !d_match) {
                rep.violations.push_back("a/d position mismatch: " + p.str());
                break;
            }
        }
        if (++seen[{w.e, w.v}] > 1) rep.violations.push_back("encoding collision: " + p.str());
    });
    rep.distinct_pairs = BigInt(seen.size());
    return rep;
}

namespace {

// Letter pairs (e_i, v_i) compatible with matching a- and d-positions:
// aa, dd, bb, bc, cb, cc.
constexpr char kPairs[6][2] = {{'a', 'a'}, {'d', 'd'}, {'b', 'b'},
                               {'b', 'c'}, {'c', 'b'}, {'c', 'c'}};

bool transition_ok(int from, int to) {
    // No cb factor in either coordinate.
    const bool cb_first = kPairs[from][0] == 'c' && kPairs[to][0] == 'b';
    const bool cb_second = kPairs[from][1] == 'c' && kPairs[to][1] == 'b';
    return !cb_first && !cb_second;
}

}  // namespace

BigInt count_word_pairs(int n) {
    if (n < 0) throw std::invalid_argument("count_word_pairs: n must be nonnegative");
    return word_pair_counts(n).back();
}

std::vector<BigInt> word_pair_counts(int upto) {
    std::vector<BigInt> out;
    out.push_back(1);  // the empty pair
    std::array<BigInt, 6> state;
    state.fill(1);  // one word pair of length 1 per admissible letter pair
    for (int len = 1; len <= upto; ++len) {
        BigInt total = 0;
        for (const auto& s : state) total += s;
        out.push_back(total);
        if (len == upto) break;
        std::array<BigInt, 6> next;
        next.fill(0);
        for (int from = 0; from < 6; ++from)
            for (int to = 0; to < 6; ++to)
                if (transition_ok(from, to)) next[to] += state[from];
        state = std::move(next);
    }
    return out;
}

}  // namespace involab
