#pragma once

// Combinatorial substrate: permutations in one-line notation, integer
// partitions, compositions with their interval set partitions, and the
// coset combinatorics the algebra layers are built on.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hfh/error.hpp"

namespace hfh {

inline constexpr int kDefaultEnumerationBound = 8;

// ---------------------------------------------------------------------------
// Partition: weakly decreasing positive parts, empty partition allowed.
// ---------------------------------------------------------------------------
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw Error("Partition: negative part");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    // multiplicity of part 1
    int mult1() const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1));
    }

    Partition conjugate() const {
        std::vector<int> conj;
        for (int i = 1; !parts_.empty() && i <= parts_[0]; ++i) {
            int m = 0;
            for (int p : parts_)
                if (p >= i) ++m;
            conj.push_back(m);
        }
        return Partition(std::move(conj));
    }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // canonical order: larger size first is NOT imposed; within algorithms we
    // sort families explicitly. operator< is plain lexicographic on parts.
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    // all partitions of n, in descending lexicographic order: (n), (n-1,1), ...
    static std::vector<Partition> all(int n) {
        std::vector<Partition> out;
        std::vector<int> cur;
        rec_all(n, n, cur, out);
        return out;
    }

private:
    static void rec_all(int remaining, int maxpart, std::vector<int>& cur,
                        std::vector<Partition>& out) {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec_all(remaining - p, p, cur, out);
            cur.pop_back();
        }
    }

    std::vector<int> parts_;
};

// partial-sum domination, sizes may differ: a <=_d b iff every prefix sum of a
// is bounded by the corresponding prefix sum of b (so in particular |a|<=|b|).
inline bool dominated_by(const Partition& a, const Partition& b) {
    int k = std::max(a.length(), b.length());
    int sa = 0, sb = 0;
    for (int i = 0; i < k; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

// lambda -> n : add 1 to every part, pad with 1s up to weight n.
inline Partition complete_arrow(const Partition& lambda, int n) {
    if (lambda.size() + lambda.length() > n)
        throw Error("complete_arrow: |lambda| + l(lambda) > n");
    std::vector<int> parts;
    for (int p : lambda.parts()) parts.push_back(p + 1);
    int pad = n - lambda.size() - lambda.length();
    parts.insert(parts.end(), pad, 1);
    return Partition(std::move(parts));
}

// lambda ^ n : append the part n - |lambda| (dropped when zero) and re-sort.
inline Partition complete_up(const Partition& lambda, int n) {
    if (lambda.size() > n) throw Error("complete_up: |lambda| > n");
    std::vector<int> parts = lambda.parts();
    parts.push_back(n - lambda.size());
    return Partition(std::move(parts));
}

inline bool arrow_defined(const Partition& lambda, int n) {
    return lambda.size() + lambda.length() <= n;
}
inline bool up_defined(const Partition& lambda, int n) { return lambda.size() <= n; }

// inverse of complete_arrow: subtract 1 from each part of a partition of n,
// dropping zeros. Every kappa |- n arises as reduce_arrow(kappa) -> n.
inline Partition reduce_arrow(const Partition& kappa) {
    std::vector<int> parts;
    for (int p : kappa.parts())
        if (p > 1) parts.push_back(p - 1);
    return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// SetPartition of [1,n], stored as a normalized block-id array.
// ---------------------------------------------------------------------------
class SetPartition {
public:
    SetPartition() = default;

    static SetPartition from_block_ids(std::vector<int> ids) {
        SetPartition sp;
        sp.block_of_ = std::move(ids);
        sp.normalize();
        return sp;
    }

    static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
        std::vector<int> ids(n, -1);
        int bid = 0;
        for (const auto& b : blocks) {
            if (b.empty()) throw Error("SetPartition: empty block");
            for (int e : b) {
                if (e < 1 || e > n || ids[e - 1] != -1)
                    throw Error("SetPartition: blocks must partition [1,n]");
                ids[e - 1] = bid;
            }
            ++bid;
        }
        for (int id : ids)
            if (id == -1) throw Error("SetPartition: blocks must cover [1,n]");
        return from_block_ids(std::move(ids));
    }

    int n() const { return static_cast<int>(block_of_.size()); }
    int num_blocks() const { return nblocks_; }
    int block_id(int element) const { return block_of_[element - 1]; }

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out(nblocks_);
        for (int e = 1; e <= n(); ++e) out[block_of_[e - 1]].push_back(e);
        return out;
    }

    // refinement: every block of *this is contained in a block of coarser.
    bool refines(const SetPartition& coarser) const {
        if (coarser.n() != n()) throw Error("SetPartition::refines: size mismatch");
        for (int a = 1; a <= n(); ++a)
            for (int b = a + 1; b <= n(); ++b)
                if (block_id(a) == block_id(b) &&
                    coarser.block_id(a) != coarser.block_id(b))
                    return false;
        return true;
    }

    static SetPartition join(const SetPartition& x, const SetPartition& y) {
        if (x.n() != y.n()) throw Error("SetPartition::join: size mismatch");
        int n = x.n();
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (int e = 0; e < n; ++e)
            for (int f = e + 1; f < n; ++f)
                if (x.block_of_[e] == x.block_of_[f] || y.block_of_[e] == y.block_of_[f])
                    unite(e, f);
        std::vector<int> ids(n);
        for (int e = 0; e < n; ++e) ids[e] = find(e);
        return from_block_ids(std::move(ids));
    }

    bool operator==(const SetPartition& o) const { return block_of_ == o.block_of_; }

private:
    void normalize() {
        std::vector<int> remap(block_of_.size(), -1);
        int next = 0;
        for (int& id : block_of_) {
            if (remap[id] == -1) remap[id] = next++;
            id = remap[id];
        }
        nblocks_ = next;
    }

    std::vector<int> block_of_;
    int nblocks_ = 0;
};

// ---------------------------------------------------------------------------
// Composition of n: positive parts, order significant.
// ---------------------------------------------------------------------------
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw Error("Composition: parts must be >= 1");
    }

    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int num_parts() const { return static_cast<int>(parts_.size()); }

    // descent set {c1, c1+c2, ..., n} (n included when nonempty)
    std::vector<int> descents() const {
        std::vector<int> d;
        int s = 0;
        for (int p : parts_) {
            s += p;
            d.push_back(s);
        }
        return d;
    }

    // complement of the descent set in [1,n]; always within [1,n-1]
    std::vector<int> code() const {
        std::vector<int> d = descents(), out;
        std::size_t j = 0;
        for (int i = 1; i <= n(); ++i) {
            if (j < d.size() && d[j] == i)
                ++j;
            else
                out.push_back(i);
        }
        return out;
    }

    static Composition from_descents(int n, const std::vector<int>& desc) {
        std::vector<int> parts;
        int prev = 0;
        for (int d : desc) {
            if (d <= prev || d > n) throw Error("Composition::from_descents: bad set");
            parts.push_back(d - prev);
            prev = d;
        }
        if (prev != n) {
            if (prev > n) throw Error("Composition::from_descents: bad set");
            parts.push_back(n - prev);
        }
        return Composition(std::move(parts));
    }

    static Composition from_code(int n, const std::vector<int>& code) {
        std::set<int> c(code.begin(), code.end());
        std::vector<int> desc;
        for (int i = 1; i <= n; ++i)
            if (!c.count(i)) desc.push_back(i);
        if (static_cast<int>(c.size()) + static_cast<int>(desc.size()) != n)
            throw Error("Composition::from_code: code not within [1,n]");
        for (int i : code)
            if (i < 1 || i >= n) throw Error("Composition::from_code: code not within [1,n-1]");
        return from_descents(n, desc);
    }

    SetPartition pi() const {
        std::vector<int> ids(n());
        int bid = 0, pos = 0;
        for (int p : parts_) {
            for (int i = 0; i < p; ++i) ids[pos++] = bid;
            ++bid;
        }
        return SetPartition::from_block_ids(std::move(ids));
    }

    // pi(*this) >= pi(finer), i.e. descents(*this) included in descents(finer)
    bool coarsens(const Composition& finer) const {
        if (finer.n() != n()) throw Error("Composition::coarsens: size mismatch");
        std::vector<int> a = descents(), b = finer.descents();
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    bool is_hook() const {
        for (int i = 1; i < num_parts(); ++i)
            if (parts_[i] != 1) return false;
        return true;
    }

    Composition sorted_desc() const {
        std::vector<int> p = parts_;
        std::sort(p.begin(), p.end(), std::greater<int>());
        return Composition(std::move(p));
    }

    Partition to_partition() const { return Partition(parts_); }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return parts_ != o.parts_; }
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

    // all compositions of n, ordered by descent-set bitmask
    static std::vector<Composition> all(int n) {
        std::vector<Composition> out;
        if (n == 0) {
            out.push_back(Composition());
            return out;
        }
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> desc;
            for (int i = 1; i < n; ++i)
                if (mask & (1u << (i - 1))) desc.push_back(i);
            desc.push_back(n);
            out.push_back(from_descents(n, desc));
        }
        return out;
    }

private:
    std::vector<int> parts_;
};

// finest composition c v d with pi(c v d) >= pi(c) v pi(d):
// descent set = descents(c) intersect descents(d).
inline Composition join(const Composition& c, const Composition& d) {
    if (c.n() != d.n()) throw Error("join: compositions of different n");
    std::vector<int> a = c.descents(), b = d.descents(), inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(inter));
    return Composition::from_descents(c.n(), inter);
}

// Moebius function of the coarsening order: d must coarsen c.
inline int mobius(const Composition& c, const Composition& d) {
    if (!d.coarsens(c)) throw Error("mobius: d does not coarsen c");
    int diff = c.num_parts() - d.num_parts();
    return (diff % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Permutation of [1,n], one-line notation, n <= 16.
// Composition convention: (a*b)(i) = a(b(i)).
// ---------------------------------------------------------------------------
class Permutation {
public:
    static constexpr int kMaxDegree = 16;

    Permutation() = default;

    explicit Permutation(const std::vector<int>& word) {
        if (word.size() > kMaxDegree) throw Error("Permutation: degree > 16");
        n_ = static_cast<std::uint8_t>(word.size());
        std::array<bool, kMaxDegree + 1> seen{};
        for (int i = 0; i < n_; ++i) {
            int v = word[i];
            if (v < 1 || v > n_ || seen[v]) throw Error("Permutation: not a bijection");
            seen[v] = true;
            word_[i] = static_cast<std::uint8_t>(v);
        }
    }

    Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

    static Permutation identity(int n) {
        if (n < 0 || n > kMaxDegree) throw Error("Permutation: bad degree");
        Permutation p;
        p.n_ = static_cast<std::uint8_t>(n);
        for (int i = 0; i < n; ++i) p.word_[i] = static_cast<std::uint8_t>(i + 1);
        return p;
    }

    // parse "24513" (digits) or "2,4,5,1,3"
    static Permutation parse(const std::string& s) {
        std::vector<int> w;
        if (s.find(',') == std::string::npos) {
            for (char ch : s) {
                if (ch < '1' || ch > '9') throw Error("Permutation::parse: bad digit");
                w.push_back(ch - '0');
            }
        } else {
            std::istringstream is(s);
            std::string tok;
            while (std::getline(is, tok, ',')) w.push_back(std::stoi(tok));
        }
        return Permutation(w);
    }

    int degree() const { return n_; }
    int operator()(int i) const { return word_[i - 1]; }
    bool is_identity() const {
        for (int i = 0; i < n_; ++i)
            if (word_[i] != i + 1) return false;
        return true;
    }

    std::vector<int> word() const { return std::vector<int>(word_.begin(), word_.begin() + n_); }

    Permutation compose(const Permutation& b) const {
        if (degree() != b.degree()) throw Error("Permutation::compose: degree mismatch");
        Permutation r;
        r.n_ = n_;
        for (int i = 0; i < n_; ++i) r.word_[i] = word_[b.word_[i] - 1];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.n_ = n_;
        for (int i = 0; i < n_; ++i) r.word_[word_[i] - 1] = static_cast<std::uint8_t>(i + 1);
        return r;
    }

    // Coxeter length = inversion count
    int length() const {
        int inv = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (word_[i] > word_[j]) ++inv;
        return inv;
    }

    // positions i in [1,n-1] with w(i) > w(i+1)
    std::vector<int> descents() const {
        std::vector<int> d;
        for (int i = 1; i < n_; ++i)
            if (word_[i - 1] > word_[i]) d.push_back(i);
        return d;
    }

    // descents of the inverse: i such that the value i+1 occurs before i
    std::vector<int> recoils() const { return inverse().descents(); }

    // right product by s_i: swaps positions i, i+1; length goes up iff
    // i is not a descent.
    Permutation times_s(int i) const {
        check_gen(i);
        Permutation r = *this;
        std::swap(r.word_[i - 1], r.word_[i]);
        return r;
    }

    // left product by s_i: swaps values i, i+1; length goes up iff i is not
    // a recoil.
    Permutation s_times(int i) const {
        check_gen(i);
        Permutation r = *this;
        for (int j = 0; j < n_; ++j) {
            if (r.word_[j] == i)
                r.word_[j] = static_cast<std::uint8_t>(i + 1);
            else if (r.word_[j] == i + 1)
                r.word_[j] = static_cast<std::uint8_t>(i);
        }
        return r;
    }

    bool is_right_descent(int i) const {
        check_gen(i);
        return word_[i - 1] > word_[i];
    }

    bool is_left_descent(int i) const {
        check_gen(i);
        int pi = 0, pi1 = 0;
        for (int j = 0; j < n_; ++j) {
            if (word_[j] == i) pi = j;
            if (word_[j] == i + 1) pi1 = j;
        }
        return pi1 < pi;
    }

    // canonical (lexicographically smallest) reduced word, obtained by
    // repeatedly peeling the smallest left descent.
    std::vector<int> reduced_word() const {
        std::vector<int> out;
        Permutation w = *this;
        while (!w.is_identity()) {
            int i = 1;
            while (!w.is_left_descent(i)) ++i;
            out.push_back(i);
            w = w.s_times(i);
        }
        return out;
    }

    SetPartition orbits() const {
        std::vector<int> ids(n_, -1);
        int bid = 0;
        for (int s = 1; s <= n_; ++s) {
            if (ids[s - 1] != -1) continue;
            int e = s;
            do {
                ids[e - 1] = bid;
                e = word_[e - 1];
            } while (e != s);
            ++bid;
        }
        return SetPartition::from_block_ids(std::move(ids));
    }

    Partition cycle_type() const {
        auto blocks = orbits().blocks();
        std::vector<int> sizes;
        for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
        return Partition(std::move(sizes));
    }

    // embed into S_m (m >= n) by fixing the new points
    Permutation extended(int m) const {
        if (m < n_ || m > kMaxDegree) throw Error("Permutation::extended: bad degree");
        Permutation r = *this;
        for (int i = n_; i < m; ++i) r.word_[i] = static_cast<std::uint8_t>(i + 1);
        r.n_ = static_cast<std::uint8_t>(m);
        return r;
    }

    bool fixes_beyond(int m) const {
        for (int i = m; i < n_; ++i)
            if (word_[i] != i + 1) return false;
        return true;
    }

    // restrict to S_m; requires that [m+1,n] is fixed pointwise
    Permutation restricted(int m) const {
        if (m > n_ || !fixes_beyond(m)) throw Error("Permutation::restricted: tail not fixed");
        Permutation r = *this;
        r.n_ = static_cast<std::uint8_t>(m);
        for (int i = m; i < kMaxDegree; ++i) r.word_[i] = 0;
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < n_; ++i) {
            if (n_ > 9 && i) os << ',';
            os << int(word_[i]);
        }
        return os.str();
    }

    bool operator==(const Permutation& o) const {
        return n_ == o.n_ && std::equal(word_.begin(), word_.begin() + n_, o.word_.begin());
    }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return std::lexicographical_compare(word_.begin(), word_.begin() + n_,
                                            o.word_.begin(), o.word_.begin() + n_);
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        h = (h ^ n_) * 1099511628211ull;
        for (int i = 0; i < n_; ++i) h = (h ^ word_[i]) * 1099511628211ull;
        return h;
    }

private:
    void check_gen(int i) const {
        if (i < 1 || i >= n_) throw Error("generator index out of range");
    }

    std::array<std::uint8_t, kMaxDegree> word_{};
    std::uint8_t n_ = 0;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

inline Permutation transposition_s(int n, int i) {
    Permutation p = Permutation::identity(n);
    return p.times_s(i);
}

// all of S_n in lexicographic order
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Coset combinatorics.
// ---------------------------------------------------------------------------

// Distinguished (minimal-length) representatives of the right cosets
// S_c \ S_n: the shuffles of the increasing words on the blocks of pi(c).
// Equivalently the words whose recoil set is contained in descents(c).
inline std::vector<Permutation> distinguished_reps(const Composition& c) {
    int n = c.n();
    std::vector<std::pair<int, int>> blocks;  // [start, end) 0-based values-1
    {
        int pos = 0;
        for (int p : c.parts()) {
            blocks.emplace_back(pos, pos + p);
            pos += p;
        }
    }
    std::vector<int> next(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) next[b] = blocks[b].first;
    std::vector<int> word;
    std::vector<Permutation> out;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == n) {
            out.push_back(Permutation(word));
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (next[b] < blocks[b].second) {
                word.push_back(next[b] + 1);
                ++next[b];
                self(self);
                --next[b];
                word.pop_back();
            }
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

// minimal Coxeter length over the conjugacy class of cycle type lambda |- n,
// by exhaustive enumeration
inline int min_length_in_class(const Partition& lambda,
                               int bound = kDefaultEnumerationBound) {
    int n = lambda.size();
    if (n > bound) throw BoundError("min_length_in_class: n exceeds enumeration bound");
    int best = -1;
    for (const auto& p : all_permutations(n)) {
        if (p.cycle_type() == lambda) {
            int l = p.length();
            if (best < 0 || l < best) best = l;
        }
    }
    if (best < 0) throw Error("min_length_in_class: empty class");
    return best;
}

inline std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace hfh
