#include "involab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace involab {

BigInt involution_count(int n) {
    if (n < 0) throw std::invalid_argument("involution_count: negative n");
    BigInt prev = 1, cur = 1;  // I(0), I(1)
    if (n == 0) return prev;
    for (int m = 2; m <= n; ++m) {
        BigInt next = cur + (m - 1) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

struct PatternSet {
    // Flattened basis patterns; values 1..len.
    struct Pat {
        int len;
        std::array<int8_t, 16> s;
    };
    std::vector<Pat> pats;

    explicit PatternSet(const std::vector<Permutation>& basis) {
        for (const auto& b : basis) {
            if (b.size() > 16) throw std::invalid_argument("basis pattern too long");
            if (b.empty()) throw std::invalid_argument("basis pattern must be nonempty");
            Pat p;
            p.len = b.size();
            for (int i = 0; i < b.size(); ++i) p.s[i] = static_cast<int8_t>(b(i + 1));
            pats.push_back(p);
        }
    }
};

// Does the placed part of pi contain sigma through the entry at anchor_pos?
// pi[p] == 0 marks an unfilled position. Roles are matched in position order;
// the role played by the anchor is fixed in turn.
struct AnchoredMatcher {
    const int8_t* pi;
    int n;
    const PatternSet::Pat* pat;
    int anchor_pos;
    std::array<int, 16> vals;

    bool consistent(int role, int v) const {
        for (int s = 0; s < role; ++s)
            if ((v > vals[s]) != (pat->s[role] > pat->s[s])) return false;
        return true;
    }

    bool rec(int role, int anchor_role, int from) {
        if (role == pat->len) return true;
        if (role == anchor_role) {
            if (anchor_pos < from) return false;
            const int v = pi[anchor_pos];
            if (!consistent(role, v)) return false;
            vals[role] = v;
            return rec(role + 1, anchor_role, anchor_pos + 1);
        }
        const int limit = (role < anchor_role) ? anchor_pos - (anchor_role - role) : n - (pat->len - role - 1) + 1;
        for (int p = from; p <= limit; ++p) {
            const int v = pi[p];
            if (v == 0) continue;
            if (!consistent(role, v)) continue;
            vals[role] = v;
            if (rec(role + 1, anchor_role, p + 1)) return true;
        }
        return false;
    }

    bool found() {
        for (int r = 0; r < pat->len; ++r)
            if (rec(0, r, 1)) return true;
        return false;
    }
};

bool creates_occurrence(const int8_t* pi, int n, const PatternSet& ps, int anchor_pos) {
    for (const auto& p : ps.pats) {
        AnchoredMatcher m{pi, n, &p, anchor_pos, {}};
        if (m.found()) return true;
    }
    return false;
}

Permutation snapshot(const int8_t* pi, int n) {
    std::vector<int> vals(n);
    for (int i = 1; i <= n; ++i) vals[i - 1] = pi[i];
    return Permutation(std::move(vals));
}

// Depth-first generation of involutions as matchings on positions. The
// callbacks keep the hot counting loop separate from the streaming use.
class InvolutionSearch {
  public:
    InvolutionSearch(const std::vector<Permutation>& basis, int n, bool prune)
        : ps_(basis), n_(n), prune_(prune) {
        if (n < 0 || n > kMaxEnumerationLength)
            throw std::invalid_argument("involution search: n out of range");
        pi_.fill(0);
    }

    // Counts completions, optionally restricted to simple permutations.
    BigInt count(bool simple_only, int threads) {
        if (threads <= 1 || n_ < 6) {
            BigInt total = 0;
            run_count(1, simple_only, total);
            return total;
        }
        // Split the first two decision levels into independent subtree tasks.
        std::vector<std::array<int8_t, kMaxEnumerationLength + 1>> tasks;
        collect_tasks(1, 2, tasks);
        std::vector<BigInt> results(tasks.size());
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const size_t idx = next.fetch_add(1);
                if (idx >= tasks.size()) break;
                InvolutionSearch sub(ps_, n_, prune_);
                sub.pi_ = tasks[idx];
                BigInt total = 0;
                sub.run_count(sub.first_free(1), simple_only, total);
                results[idx] = std::move(total);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        BigInt total = 0;
        for (const auto& r : results) total += r;  // fixed order: deterministic
        return total;
    }

    void stream(const std::function<void(const Permutation&)>& fn) {
        run_stream(1, fn);
    }

  private:
    InvolutionSearch(const PatternSet& ps, int n, bool prune) : ps_(ps), n_(n), prune_(prune) {
        pi_.fill(0);
    }

    int first_free(int from) const {
        int i = from;
        while (i <= n_ && pi_[i] != 0) ++i;
        return i;
    }

    bool ok_fix(int i) { return !prune_ || !creates_occurrence(pi_.data(), n_, ps_, i); }
    bool ok_pair(int i, int j) {
        return !prune_ || (!creates_occurrence(pi_.data(), n_, ps_, i) &&
                           !creates_occurrence(pi_.data(), n_, ps_, j));
    }

    void run_count(int from, bool simple_only, BigInt& total) {
        const int i = first_free(from);
        if (i > n_) {
            if (!simple_only || simple_placed()) total += 1;
            return;
        }
        pi_[i] = static_cast<int8_t>(i);
        if (ok_fix(i)) run_count(i + 1, simple_only, total);
        pi_[i] = 0;
        for (int j = i + 1; j <= n_; ++j) {
            if (pi_[j] != 0) continue;
            pi_[i] = static_cast<int8_t>(j);
            pi_[j] = static_cast<int8_t>(i);
            if (ok_pair(i, j)) run_count(i + 1, simple_only, total);
            pi_[i] = 0;
            pi_[j] = 0;
        }
    }

    void run_stream(int from, const std::function<void(const Permutation&)>& fn) {
        const int i = first_free(from);
        if (i > n_) {
            fn(snapshot(pi_.data(), n_));
            return;
        }
        pi_[i] = static_cast<int8_t>(i);
        if (ok_fix(i)) run_stream(i + 1, fn);
        pi_[i] = 0;
        for (int j = i + 1; j <= n_; ++j) {
            if (pi_[j] != 0) continue;
            pi_[i] = static_cast<int8_t>(j);
            pi_[j] = static_cast<int8_t>(i);
            if (ok_pair(i, j)) run_stream(i + 1, fn);
            pi_[i] = 0;
            pi_[j] = 0;
        }
    }

    void collect_tasks(int from, int depth,
                       std::vector<std::array<int8_t, kMaxEnumerationLength + 1>>& out) {
        const int i = first_free(from);
        if (i > n_ || depth == 0) {
            out.push_back(pi_);
            return;
        }
        pi_[i] = static_cast<int8_t>(i);
        if (ok_fix(i)) collect_tasks(i + 1, depth - 1, out);
        pi_[i] = 0;
        for (int j = i + 1; j <= n_; ++j) {
            if (pi_[j] != 0) continue;
            pi_[i] = static_cast<int8_t>(j);
            pi_[j] = static_cast<int8_t>(i);
            if (ok_pair(i, j)) collect_tasks(i + 1, depth - 1, out);
            pi_[i] = 0;
            pi_[j] = 0;
        }
    }

    // Interval scan over the fully placed array, avoiding the Permutation
    // wrapper in the counting loop.
    bool simple_placed() const {
        if (n_ < 2) return false;
        for (int i = 1; i <= n_; ++i) {
            int lo = pi_[i], hi = pi_[i];
            for (int j = i + 1; j <= n_; ++j) {
                lo = std::min<int>(lo, pi_[j]);
                hi = std::max<int>(hi, pi_[j]);
                const int len = j - i + 1;
                if (len == n_) break;
                if (hi - lo + 1 == len) return false;
            }
        }
        return true;
    }

    PatternSet ps_;
    int n_;
    bool prune_;
    std::array<int8_t, kMaxEnumerationLength + 1> pi_{};
};

// Plain permutations, built by appending entries left to right. Only the
// occurrences ending at the new rightmost entry need testing.
class PermutationSearch {
  public:
    PermutationSearch(const std::vector<Permutation>& basis, int n) : ps_(basis), n_(n) {
        if (n < 0 || n > kMaxEnumerationLength)
            throw std::invalid_argument("permutation search: n out of range");
        pi_.fill(0);
        used_.fill(false);
    }

    void stream(const std::function<void(const Permutation&)>& fn) { rec(1, fn); }

    BigInt count() {
        BigInt total = 0;
        rec_count(1, total);
        return total;
    }

  private:
    void rec(int len, const std::function<void(const Permutation&)>& fn) {
        if (len > n_) {
            fn(snapshot(pi_.data(), n_));
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (used_[v]) continue;
            pi_[len] = static_cast<int8_t>(v);
            used_[v] = true;
            if (!creates_occurrence(pi_.data(), len, ps_, len)) rec(len + 1, fn);
            used_[v] = false;
            pi_[len] = 0;
        }
    }

    void rec_count(int len, BigInt& total) {
        if (len > n_) {
            total += 1;
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (used_[v]) continue;
            pi_[len] = static_cast<int8_t>(v);
            used_[v] = true;
            if (!creates_occurrence(pi_.data(), len, ps_, len)) rec_count(len + 1, total);
            used_[v] = false;
            pi_[len] = 0;
        }
    }

    PatternSet ps_;
    int n_;
    std::array<int8_t, kMaxEnumerationLength + 1> pi_{};
    std::array<bool, kMaxEnumerationLength + 1> used_{};
};

}  // namespace

void for_each_involution(int n, const std::function<void(const Permutation&)>& fn) {
    InvolutionSearch search({}, n, /*prune=*/false);
    search.stream(fn);
}

BigInt count_avoiders(const std::vector<Permutation>& basis, int n, bool involutions_only,
                      int threads) {
    if (basis.empty()) throw std::invalid_argument("count_avoiders: basis must be nonempty");
    if (involutions_only) {
        InvolutionSearch search(basis, n, /*prune=*/true);
        return search.count(/*simple_only=*/false, threads);
    }
    PermutationSearch search(basis, n);
    return search.count();
}

CountTable tabulate_avoiders(const std::vector<Permutation>& basis, int lo, int hi,
                             bool involutions_only, int threads) {
    if (lo < 0 || hi < lo) throw std::invalid_argument("tabulate_avoiders: bad range");
    CountTable t{basis, involutions_only, {}};
    for (int n = lo; n <= hi; ++n) t.rows[n] = count_avoiders(basis, n, involutions_only, threads);
    return t;
}

void for_each_avoiding_involution(const std::vector<Permutation>& basis, int n,
                                  const std::function<void(const Permutation&)>& fn) {
    InvolutionSearch search(basis, n, /*prune=*/!basis.empty());
    search.stream(fn);
}

void for_each_avoiding_permutation(const std::vector<Permutation>& basis, int n,
                                   const std::function<void(const Permutation&)>& fn) {
    PermutationSearch search(basis, n);
    search.stream(fn);
}

BigInt count_simple_avoiders(const Permutation& beta, int n, int threads) {
    if (n < 2) throw std::invalid_argument("count_simple_avoiders: n must be at least 2");
    InvolutionSearch search({beta}, n, /*prune=*/true);
    return search.count(/*simple_only=*/true, threads);
}

std::vector<Permutation> simple_involutions_avoiding(const Permutation& beta, int n) {
    std::vector<Permutation> out;
    for_each_avoiding_involution({beta}, n, [&](const Permutation& p) {
        if (is_simple(p)) out.push_back(p);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> simples_of_class(const std::vector<Permutation>& basis, int n) {
    if (n < 2) throw std::invalid_argument("simples_of_class: n must be at least 2");
    std::vector<Permutation> out;
    for_each_avoiding_permutation(basis, n, [&](const Permutation& p) {
        if (is_simple(p)) out.push_back(p);
    });
    std::sort(out.begin(), out.end());
    return out;
}

BigInt RefinedCount::total_with_fp(int fp) const {
    BigInt t = 0;
    for (const auto& [key, c] : counts)
        if (key[0] == fp) t += c;
    return t;
}

BigInt RefinedCount::total_with(int fp, int lrmin, int rlmax) const {
    auto it = counts.find({fp, lrmin, rlmax});
    return it == counts.end() ? BigInt(0) : it->second;
}

RefinedCount refined_simple_123_counts(int n) {
    if (n < 4) throw std::invalid_argument("refined_simple_123_counts: n must be at least 4");
    RefinedCount rc;
    rc.n = n;
    for_each_avoiding_involution({Permutation{1, 2, 3}}, n, [&](const Permutation& p) {
        if (!is_simple(p)) return;
        const StatProfile s = stats(p);
        rc.counts[{s.fp, s.lrmin, s.rlmax}] += 1;
    });
    return rc;
}

bool merge_injection_check(const Permutation& beta, int n) {
    if (!is_involution(beta) || skew_decomposable(beta))
        throw std::invalid_argument(
            "merge_injection_check: pattern must be a skew-indecomposable involution");
    bool ok = true;
    std::set<Permutation> images;
    BigInt domain = 0;
    for_each_avoiding_permutation({beta}, n, [&](const Permutation& p) {
        domain += 1;
        const Permutation merged = skew_sum(p, inverse(p));
        if (!is_involution(merged) || contains(merged, beta)) ok = false;
        images.insert(merged);
    });
    return ok && BigInt(images.size()) == domain;
}

}  // namespace involab
