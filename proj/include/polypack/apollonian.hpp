#pragma once

#include <array>
#include <atomic>
#include <map>
#include <thread>
#include <unordered_map>

#include "descartes.hpp"

namespace polypack {

// Facet of an orthoplicial packing, one ball from each antipodal pair.
// Written with a '-' before each barred letter: "1-23-4" is {b1, b-2, b3, b-4}.
struct FacetWord {
    std::array<int, 4> sign{1, 1, 1, 1};

    std::string str() const {
        std::string s;
        for (int k = 0; k < 4; ++k) {
            if (sign[k] < 0) s += '-';
            s += char('1' + k);
        }
        return s;
    }
    static FacetWord parse(const std::string& s) {
        FacetWord w;
        int k = 0;
        bool bar = false;
        for (char c : s) {
            if (c == '-') {
                bar = true;
                continue;
            }
            if (c < '1' || c > '4' || c - '1' != k) throw std::invalid_argument("bad facet word: " + s);
            w.sign[k++] = bar ? -1 : 1;
            bar = false;
        }
        if (k != 4) throw std::invalid_argument("bad facet word: " + s);
        return w;
    }
    int bars() const { return int(std::count(sign.begin(), sign.end(), -1)); }
    int differing(const FacetWord& o) const {
        int n = 0;
        for (int k = 0; k < 4; ++k) n += sign[k] != o.sign[k];
        return n;
    }
    // ball indices in the order b1 b2 b3 b4 b-1 b-2 b-3 b-4
    std::vector<int> balls() const {
        std::vector<int> v;
        for (int k = 0; k < 4; ++k) v.push_back(sign[k] > 0 ? k : k + 4);
        std::sort(v.begin(), v.end());
        return v;
    }
    friend bool operator==(const FacetWord& a, const FacetWord& b) { return a.sign == b.sign; }
    friend bool operator<(const FacetWord& a, const FacetWord& b) { return a.sign > b.sign; }
};

inline std::vector<FacetWord> all_facet_words() {
    std::vector<FacetWord> out;
    for (int mask = 0; mask < 16; ++mask) {
        FacetWord w;
        for (int k = 0; k < 4; ++k) w.sign[k] = (mask >> (3 - k) & 1) ? -1 : 1;
        out.push_back(w);
    }
    return out;
}

// The standard orthoplicial sphere packing, ordered b1 b2 b3 b4 b-1 b-2 b-3 b-4.
template <class S>
Packing<S> standard_orthoplicial() {
    std::vector<Ball<S>> b{{0, 0, 1, 1, 1},   {0, 0, -1, 1, 1}, {1, 1, 0, 0, 1},   {-1, 1, 0, 0, 1},
                           {0, 0, -1, -1, 1}, {0, 0, 1, -1, 1}, {-1, -1, 0, 0, 1}, {1, -1, 0, 0, 1}};
    auto p = make_packing(std::move(b), "orthoplex4");
    for (auto& w : all_facet_words()) p.facets.push_back(w.balls());
    return p;
}

// Orthoplicial packing from the vertex class of (1,1,1,1)/sqrt2 of the ridge-scribed 4-cube.
// b_i is positive iff the first coordinate of its center is positive.
template <class S>
Packing<S> cubical_orthoplicial() {
    auto r = num::from_int<S>(1) / num::root<S>(2);
    const int signs[8][4] = {{1, 1, 1, 1},     {1, -1, 1, -1},   {1, -1, -1, 1},   {1, 1, -1, -1},
                             {-1, -1, -1, -1}, {-1, 1, -1, 1},   {-1, 1, 1, -1},   {-1, -1, 1, 1}};
    std::vector<Ball<S>> b;
    for (auto& s : signs) {
        Vec<S> x;
        for (int k = 0; k < 4; ++k) x.push_back(s[k] > 0 ? r : -r);
        x.push_back(num::from_int<S>(1));
        b.emplace_back(std::move(x));
    }
    auto p = make_packing(std::move(b), "orthoplex4");
    for (auto& w : all_facet_words()) p.facets.push_back(w.balls());
    return p;
}

template <class S>
struct ApollonianGroup {
    std::vector<LorentzMap<S>> gens;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> facets;  // ball indices of each generator's facet, when known

    std::size_t size() const { return gens.size(); }
    void add(LorentzMap<S> m, std::string label, std::vector<int> facet = {}) {
        gens.push_back(std::move(m));
        labels.push_back(std::move(label));
        facets.push_back(std::move(facet));
    }
    const LorentzMap<S>& by_label(const std::string& l) const { return gens[index_of(l)]; }
    std::size_t index_of(const std::string& l) const {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return i;
        throw std::out_of_range("no generator labelled " + l);
    }

    // Conjugates of integer generators: gens[i] = frame * base[i] * frame_inv.
    std::optional<LorentzMap<S>> frame, frame_inv;
    std::vector<LorentzMap<S>> base;

    // a * b, conjugating once so intermediate terms stay small
    LorentzMap<S> product(const std::string& a, const std::string& b) const {
        auto i = index_of(a), j = index_of(b);
        if (frame) return *frame * (base[i] * base[j]) * *frame_inv;
        return gens[i] * gens[j];
    }
};

namespace detail {

template <class S>
const ApollonianGroup<S>& standard_orthoplicial_group() {
    static const ApollonianGroup<S> g = [] {
        auto p = standard_orthoplicial<S>();
        auto center = lorentz_barycenter(p.balls, all_indices(p));
        ApollonianGroup<S> out;
        for (auto& w : all_facet_words()) {
            auto f = w.balls();
            out.add(reflection_in(dual_vector(coords_of(p.balls, f), &center)), w.str(), f);
        }
        return out;
    }();
    return g;
}

// The Lorentz map carrying `from` ball-by-ball onto `to`, if any.
template <class S>
std::optional<LorentzMap<S>> frame_between(const std::vector<Ball<S>>& from_balls, const std::vector<Ball<S>>& to_balls) {
    if (from_balls.size() != to_balls.size() || from_balls.empty()) return std::nullopt;
    std::vector<Vec<S>> vs;
    for (auto& b : from_balls) vs.push_back(b.x);
    auto idx = independent_subset(vs);
    if (idx.size() != vs[0].size()) return std::nullopt;
    std::vector<Vec<S>> from, to;
    for (auto i : idx) {
        from.push_back(vs[i]);
        to.push_back(to_balls[i].x);
    }
    auto inv = inverse(Matrix<S>::from_columns(from));
    if (!inv) return std::nullopt;
    auto n = Matrix<S>::from_columns(to) * *inv;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (!vec_eq(n * vs[i], to_balls[i].x)) return std::nullopt;
    return n;
}

template <class S>
std::optional<LorentzMap<S>> standard_frame(const Packing<S>& p) {
    if (p.size() != 8) return std::nullopt;
    return frame_between(standard_orthoplicial<S>().balls, p.balls);
}

}  // namespace detail

// One inversion per facet of the tangency polytope, in the plane of the facet's dual ball.
// Orthoplicial packings get facet-word labels; in canonical order their generators are
// conjugates of the standard ones.
template <class S>
ApollonianGroup<S> generators(const Packing<S>& p) {
    ApollonianGroup<S> g;
    bool ortho = p.dim() == 3 && is_orthoplicial(p);
    bool canonical = ortho;
    if (ortho) {
        auto anti = gram_antipodes(p);
        for (int i = 0; i < 4; ++i) canonical = canonical && anti[i] == i + 4;
    }
    if (canonical) {
        const auto& std_g = detail::standard_orthoplicial_group<S>();
        auto n = detail::standard_frame(p);
        if (n) {
            auto q = lorentz_form<S>(5);
            auto ninv = q * n->transpose() * q;
            for (std::size_t i = 0; i < std_g.size(); ++i) g.add(*n * std_g.gens[i] * ninv, std_g.labels[i], std_g.facets[i]);
            g.frame = *n;
            g.frame_inv = ninv;
            g.base = std_g.gens;
            return g;
        }
    }
    auto center = lorentz_barycenter(p.balls, all_indices(p));
    if (canonical) {
        for (auto& w : all_facet_words()) {
            auto f = w.balls();
            g.add(reflection_in(dual_vector(coords_of(p.balls, f), &center)), w.str(), f);
        }
        return g;
    }
    auto facets = facets_of(p);
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const auto& f = facets[i];
        g.add(reflection_in(dual_vector(coords_of(p.balls, f), &center)), "f" + std::to_string(i), f);
    }
    return g;
}

// The 16 integer matrices of the orthoplicial Apollonian group as printed, with their
// printed labels and the conjugation each is printed with (conjugator, source label).
struct PrintedGenerator {
    std::string label;
    Matrix<Exact> matrix;
    char conjugator;  // 0 for the first entry
    std::string source;
};

inline Matrix<Exact> symmetry_matrix(char name) {
    switch (name) {
        case 'V': return Matrix<Exact>{{-1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
        case 'E': {
            Matrix<Exact> e{{1, 1, -1, -1, 0}, {1, 1, 1, 1, 0}, {-1, 1, 1, -1, 0}, {-1, 1, -1, 1, 0}, {0, 0, 0, 0, 2}};
            return Exact(Rational(1, 2)) * e;
        }
        case 'R': return Matrix<Exact>{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
        case 'F': return Matrix<Exact>{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}};
        case 'S': return Matrix<Exact>{{1, 0, 0, 0, 0}, {0, -1, 0, -2, 2}, {0, 0, 1, 0, 0}, {0, -2, 0, -1, 2}, {0, -2, 0, -2, 3}};
    }
    throw std::invalid_argument(std::string("unknown symmetry generator ") + name);
}

// V, E, R, F, S in Coxeter-graph order.
inline std::vector<std::pair<char, Matrix<Exact>>> symmetrized_generators() {
    std::vector<std::pair<char, Matrix<Exact>>> out;
    for (char c : {'V', 'E', 'R', 'F', 'S'}) out.emplace_back(c, symmetry_matrix(c));
    return out;
}

inline std::vector<PrintedGenerator> orthoplicial_generators() {
    using M = Matrix<Exact>;
    return {
        {"1234", symmetry_matrix('S'), 0, ""},
        {"123-4", M{{1, 0, 0, 0, 0}, {0, -1, -2, 0, 2}, {0, -2, -1, 0, 2}, {0, 0, 0, 1, 0}, {0, -2, -2, 0, 3}}, 'F', "1234"},
        {"12-34", M{{1, 0, 0, 0, 0}, {0, -1, 2, 0, 2}, {0, 2, -1, 0, -2}, {0, 0, 0, 1, 0}, {0, -2, 2, 0, 3}}, 'R', "123-4"},
        {"12-3-4", M{{1, 0, 0, 0, 0}, {0, -1, 0, 2, 2}, {0, 0, 1, 0, 0}, {0, 2, 0, -1, -2}, {0, -2, 0, 2, 3}}, 'F', "12-34"},
        {"1-234", M{{-1, 0, 0, -2, 2}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {-2, 0, 0, -1, 2}, {-2, 0, 0, -2, 3}}, 'E', "12-34"},
        {"1-23-4", M{{-1, 0, -2, 0, 2}, {0, 1, 0, 0, 0}, {-2, 0, -1, 0, 2}, {0, 0, 0, 1, 0}, {-2, 0, -2, 0, 3}}, 'F', "1-234"},
        {"1-2-34", M{{-1, 0, 2, 0, 2}, {0, 1, 0, 0, 0}, {2, 0, -1, 0, -2}, {0, 0, 0, 1, 0}, {-2, 0, 2, 0, 3}}, 'R', "1-23-4"},
        {"1-2-3-4", M{{-1, 0, 0, 2, 2}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {2, 0, 0, -1, -2}, {-2, 0, 0, 2, 3}}, 'F', "1-2-34"},
        {"-1234", M{{-1, 0, 0, 2, -2}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {2, 0, 0, -1, 2}, {2, 0, 0, -2, 3}}, 'V', "1-234"},
        {"-123-4", M{{-1, 0, 2, 0, -2}, {0, 1, 0, 0, 0}, {2, 0, -1, 0, 2}, {0, 0, 0, 1, 0}, {2, 0, -2, 0, 3}}, 'F', "-1234"},
        {"-12-34", M{{-1, 0, -2, 0, -2}, {0, 1, 0, 0, 0}, {-2, 0, -1, 0, -2}, {0, 0, 0, 1, 0}, {2, 0, 2, 0, 3}}, 'R', "-123-4"},
        {"-12-3-4", M{{-1, 0, 0, -2, -2}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {-2, 0, 0, -1, -2}, {2, 0, 0, 2, 3}}, 'F', "-12-34"},
        {"-1-234", M{{1, 0, 0, 0, 0}, {0, -1, 0, 2, -2}, {0, 0, 1, 0, 0}, {0, 2, 0, -1, 2}, {0, 2, 0, -2, 3}}, 'E', "-12-34"},
        {"-1-23-4", M{{1, 0, 0, 0, 0}, {0, -1, 2, 0, -2}, {0, 2, -1, 0, 2}, {0, 0, 0, 1, 0}, {0, 2, -2, 0, 3}}, 'F', "-1-234"},
        {"-1-2-34", M{{1, 0, 0, 0, 0}, {0, -1, -2, 0, -2}, {0, -2, -1, 0, -2}, {0, 0, 0, 1, 0}, {0, 2, 2, 0, 3}}, 'R', "-1-23-4"},
        {"-1-2-3-4", M{{1, 0, 0, 0, 0}, {0, -1, 0, -2, -2}, {0, 0, 1, 0, 0}, {0, -2, 0, -1, -2}, {0, 2, 0, 2, 3}}, 'F', "-1-2-34"},
    };
}

// The printed labels name balls in another order: printed letters 1, 2, 3, 4 are the
// standard packing's b3, b4, b1, b2.
inline FacetWord printed_to_standard(const FacetWord& w) {
    FacetWord s;
    s.sign = {w.sign[2], w.sign[3], w.sign[0], w.sign[1]};
    return s;
}

// Smallest k > 0 with m^k = I, or 0 if none up to the limit.
template <class S>
int matrix_order(const Matrix<S>& m, int limit = 64) {
    auto id = Matrix<S>::identity(m.rows());
    auto p = m;
    for (int k = 1; k <= limit; ++k) {
        if (p == id) return k;
        p = p * m;
    }
    return 0;
}

// ---------------------------------------------------------------------------------------
// Orbit enumeration

struct OrbitBound {
    int depth = -1;                       // required
    std::optional<double> max_curvature;  // on |curvature|
};

struct OrbitOptions {
    unsigned threads = 0;  // 0: hardware concurrency
    bool lattice = true;   // allow the integer lattice engine
};

template <class S>
struct OrbitEntry {
    int depth;
    S curvature;
    int parent;     // -1 for seeds
    int generator;  // generator that produced it from its parent, -1 for seeds
};

namespace detail {

constexpr std::size_t kMaxFrame = 6;
using IKey = std::array<std::int64_t, kMaxFrame>;

struct IKeyHash {
    std::size_t operator()(const IKey& k) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto v : k) {
            std::uint64_t z = std::uint64_t(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            h ^= z ^ (z >> 31);
        }
        return h;
    }
};

template <class S>
struct VecHash {
    std::size_t operator()(const Vec<S>& v) const noexcept {
        std::size_t h = 0;
        for (auto& x : v) h = h * 1000003u ^ std::hash<S>{}(x);
        return h;
    }
};
template <class S>
struct VecEq {
    bool operator()(const Vec<S>& a, const Vec<S>& b) const { return a == b; }
};

// Float vectors are keyed by their coordinates rounded to a grid.
struct QuantKey {
    std::vector<std::int64_t> q;
    friend bool operator==(const QuantKey& a, const QuantKey& b) { return a.q == b.q; }
};
struct QuantHash {
    std::size_t operator()(const QuantKey& k) const noexcept {
        IKeyHash h;
        IKey a{};
        std::size_t out = 0;
        for (std::size_t i = 0; i < k.q.size(); ++i) {
            a[i % kMaxFrame] = k.q[i];
            if (i % kMaxFrame == kMaxFrame - 1 || i + 1 == k.q.size()) {
                out ^= h(a) + (out << 1);
                a = IKey{};
            }
        }
        return out;
    }
};

template <class Rep>
struct Bfs {
    std::vector<Rep> items;
    std::vector<int> depth, parent, gen;
};

inline unsigned thread_count(unsigned requested) {
    if (requested) return requested;
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

// Breadth-first closure. Children are computed in parallel slices of the frontier and merged
// in frontier order, so the result does not depend on the thread count.
template <class Rep, class Key, class KeyHash, class MakeKey, class Apply, class Accept>
Bfs<Rep> breadth_first(const std::vector<Rep>& seeds, std::size_t ngens, int max_depth, MakeKey make_key, Apply apply,
                       Accept accept, unsigned threads) {
    Bfs<Rep> r;
    std::unordered_map<Key, int, KeyHash> index;
    for (auto& s : seeds) {
        auto k = make_key(s);
        if (index.count(k)) continue;
        index.emplace(std::move(k), int(r.items.size()));
        r.items.push_back(s);
        r.depth.push_back(0);
        r.parent.push_back(-1);
        r.gen.push_back(-1);
    }
    std::size_t lo = 0;
    struct Child {
        Rep rep;
        Key key;
        int parent, gen;
    };
    unsigned nt = thread_count(threads);
    for (int dep = 0; dep < max_depth; ++dep) {
        std::size_t hi = r.items.size();
        if (lo == hi) break;
        std::size_t n = hi - lo;
        unsigned workers = unsigned(std::min<std::size_t>(nt, (n + 255) / 256));
        if (workers == 0) workers = 1;
        std::vector<std::vector<Child>> out(workers);
        std::vector<std::exception_ptr> errors(workers);
        auto work = [&](unsigned w) {
            try {
                std::size_t a = lo + n * w / workers, b = lo + n * (w + 1) / workers;
                for (std::size_t i = a; i < b; ++i)
                    for (std::size_t g = 0; g < ngens; ++g) {
                        if (int(g) == r.gen[i]) continue;  // undoes the step that produced item i
                        Rep c = apply(g, r.items[i]);
                        if (!accept(c)) continue;
                        Key k = make_key(c);
                        if (index.count(k)) continue;
                        out[w].push_back({std::move(c), std::move(k), int(i), int(g)});
                    }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto& chunk : out)
            for (auto& c : chunk) {
                auto [it, fresh] = index.emplace(std::move(c.key), int(r.items.size()));
                if (!fresh) continue;
                r.items.push_back(std::move(c.rep));
                r.depth.push_back(dep + 1);
                r.parent.push_back(c.parent);
                r.gen.push_back(c.gen);
            }
        lo = hi;
    }
    return r;
}

inline std::int64_t checked_dot(const std::int64_t* row, const IKey& c, std::size_t n) {
    i128 s = 0;
    for (std::size_t k = 0; k < n; ++k) s += i128(row[k]) * c[k];
    if (s > std::numeric_limits<std::int64_t>::max() || s < std::numeric_limits<std::int64_t>::min())
        throw overflow_error("orbit coordinates exceed 64 bits");
    return std::int64_t(s);
}

// Row-style Hermite normal form of integer vectors; returns a basis of their span.
inline std::vector<std::vector<i128>> hermite_basis(std::vector<std::vector<i128>> rows, std::size_t n) {
    auto check = [](i128 v) {
        const i128 lim = i128(1) << 100;
        if (v > lim || v < -lim) throw overflow_error("lattice basis overflow");
        return v;
    };
    std::vector<std::vector<i128>> basis;
    std::size_t r0 = 0;
    for (std::size_t c = 0; c < n && r0 < rows.size(); ++c) {
        // gcd-reduce column c over rows r0..
        for (;;) {
            std::size_t piv = rows.size();
            for (std::size_t i = r0; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (piv == rows.size() || (rows[i][c] < 0 ? -rows[i][c] : rows[i][c]) <
                                                                   (rows[piv][c] < 0 ? -rows[piv][c] : rows[piv][c])))
                    piv = i;
            if (piv == rows.size()) break;
            std::swap(rows[r0], rows[piv]);
            bool done = true;
            for (std::size_t i = r0 + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                i128 q = rows[i][c] / rows[r0][c];
                for (std::size_t k = 0; k < n; ++k) rows[i][k] = check(rows[i][k] - q * rows[r0][k]);
                if (rows[i][c] != 0) done = false;
            }
            if (done) {
                ++r0;
                break;
            }
        }
    }
    rows.resize(r0);
    return rows;
}

}  // namespace detail

template <class S>
struct OrbitReport {
    std::vector<Ball<S>> seed;
    std::vector<std::string> labels;
    OrbitBound bound;
    std::string engine;  // "lattice", "exact" or "float"
    std::vector<OrbitEntry<S>> entries;
    std::vector<std::size_t> per_depth;

    std::size_t size() const { return entries.size(); }

    Ball<S> ball(std::size_t i) const {
        if (!direct.empty()) return Ball<S>(direct[i]);
        Vec<S> x(to_ambient.rows(), num::from_int<S>(0));
        for (std::size_t r = 0; r < to_ambient.rows(); ++r)
            for (std::size_t k = 0; k < to_ambient.cols(); ++k)
                if (lattice[i][k]) x[r] += to_ambient(r, k) * num::from_int<S>(lattice[i][k]);
        return Ball<S>(std::move(x));
    }

    // generator indices of a word producing entry i from a seed (applied last-first)
    std::vector<int> word(std::size_t i) const {
        std::vector<int> w;
        for (int k = int(i); entries[k].parent >= 0; k = entries[k].parent) w.push_back(entries[k].generator);
        return w;
    }

    bool all_integral() const {
        for (auto& e : entries)
            if (!num::is_integer(e.curvature)) return false;
        return true;
    }

    // internal representation
    std::vector<detail::IKey> lattice;
    Matrix<S> to_ambient;
    std::vector<Vec<S>> direct;
};

namespace detail {

template <class S>
bool rational(const S& x) {
    if constexpr (std::is_same_v<S, double>)
        return false;
    else
        return x.is_rational();
}

// Integer frame for an orbit: a basis L (columns, ambient coordinates) of a lattice containing
// every seed and invariant under every generator, with the generators as integer matrices.
template <class S>
struct LatticeFrame {
    Matrix<S> basis;  // ambient n x r
    std::vector<std::vector<std::int64_t>> gens;
    std::vector<IKey> seeds;
    std::size_t rank = 0;
};

template <class S>
std::optional<LatticeFrame<S>> lattice_frame(const std::vector<Ball<S>>& seeds, const std::vector<LorentzMap<S>>& gens) {
    if constexpr (std::is_same_v<S, double>) {
        return std::nullopt;
    } else {
        std::size_t n = seeds.at(0).x.size();
        // span of the seeds, closed under the generators
        std::vector<Vec<S>> cols;
        for (auto i : independent_subset([&] {
                 std::vector<Vec<S>> v;
                 for (auto& b : seeds) v.push_back(b.x);
                 return v;
             }()))
            cols.push_back(seeds[i].x);
        for (bool grew = true; grew;) {
            grew = false;
            for (auto& g : gens)
                for (std::size_t j = 0; j < cols.size() && !grew; ++j) {
                    auto y = g * cols[j];
                    auto trial = cols;
                    trial.push_back(y);
                    if (rank(Matrix<S>::from_columns(trial)) > cols.size()) {
                        cols.push_back(y);
                        grew = true;
                    }
                }
        }
        std::size_t r = cols.size();
        if (r > kMaxFrame) return std::nullopt;
        auto B = Matrix<S>::from_columns(cols);
        // coordinates in B: through the Gram matrix when B spans the whole space, else
        // through the normal equations
        auto Bt = B.transpose();
        auto G = Bt * lorentz_form<S>(n) * B;
        std::optional<Matrix<S>> ginv, inv;
        if (r == n) ginv = inverse(G);
        if (!ginv) inv = inverse(Bt * B);
        if (!ginv && !inv) return std::nullopt;
        auto coords = [&](const Vec<S>& x) -> std::optional<Vec<S>> {
            if (ginv) {
                Vec<S> ip(r);
                for (std::size_t i = 0; i < r; ++i) ip[i] = inner(cols[i], x);
                return (*ginv) * ip;
            }
            auto c = (*inv) * (Bt * x);
            if (!vec_eq(B * c, x)) return std::nullopt;
            return c;
        };
        std::vector<Vec<S>> alpha;
        for (auto& b : seeds) {
            auto c = coords(b.x);
            if (!c) return std::nullopt;
            alpha.push_back(*c);
        }
        std::vector<Matrix<S>> T;
        for (auto& g : gens) {
            Matrix<S> t(r, r);
            for (std::size_t j = 0; j < r; ++j) {
                auto c = coords(g * cols[j]);
                if (!c) return std::nullopt;
                for (std::size_t i = 0; i < r; ++i) t(i, j) = (*c)[i];
            }
            T.push_back(t);
        }
        for (auto& a : alpha)
            for (auto& v : a)
                if (!rational(v)) return std::nullopt;
        for (auto& t : T)
            for (auto& v : t.data())
                if (!rational(v)) return std::nullopt;

        // lattice generated by the seed coordinates, enlarged until generator-invariant
        std::vector<Vec<S>> gensL = alpha;
        Matrix<S> L, Linv;
        for (int round = 0;; ++round) {
            if (round > 12) return std::nullopt;
            i128 D = 1;
            for (auto& v : gensL)
                for (auto& x : v) {
                    i128 d = x.a().den();
                    D = D / gcd128(D, d) * d;
                    if (D > (i128(1) << 60)) return std::nullopt;
                }
            std::vector<std::vector<i128>> rows;
            for (auto& v : gensL) {
                std::vector<i128> row;
                for (auto& x : v) row.push_back(i128(x.a().num()) * (D / x.a().den()));
                rows.push_back(row);
            }
            std::vector<std::vector<i128>> hb;
            try {
                hb = hermite_basis(rows, r);
            } catch (const overflow_error&) {
                return std::nullopt;
            }
            if (hb.size() != r) return std::nullopt;
            L = Matrix<S>(r, r);
            try {
                for (std::size_t j = 0; j < r; ++j)
                    for (std::size_t i = 0; i < r; ++i) L(i, j) = S(Rational::from128(hb[j][i], D));
            } catch (const overflow_error&) {
                return std::nullopt;
            }
            Linv = *inverse(L);
            bool closed = true;
            for (auto& t : T) {
                auto img = Linv * t * L;
                for (std::size_t j = 0; j < r; ++j) {
                    bool col_ok = true;
                    for (std::size_t i = 0; i < r; ++i) col_ok = col_ok && img(i, j).is_integer();
                    if (!col_ok) {
                        closed = false;
                        gensL.push_back((t * L).column(j));
                    }
                }
            }
            if (closed) break;
        }
        LatticeFrame<S> f;
        f.rank = r;
        f.basis = B * L;
        for (auto& t : T) {
            auto img = Linv * t * L;
            std::vector<std::int64_t> m(r * r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) m[i * r + j] = img(i, j).a().num();
            f.gens.push_back(std::move(m));
        }
        for (auto& a : alpha) {
            auto c = Linv * a;
            IKey k{};
            for (std::size_t i = 0; i < r; ++i) {
                if (!c[i].is_integer()) return std::nullopt;
                k[i] = c[i].a().num();
            }
            f.seeds.push_back(k);
        }
        return f;
    }
}

template <class S>
void sort_report(OrbitReport<S>& rep) {
    std::size_t n = rep.entries.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Vec<S>> amb;
    bool use_lattice = rep.direct.empty();
    auto less = [&](std::size_t a, std::size_t b) {
        const auto& ea = rep.entries[a];
        const auto& eb = rep.entries[b];
        if (ea.depth != eb.depth) return ea.depth < eb.depth;
        if (!num::eq(ea.curvature, eb.curvature)) return num::sign(ea.curvature - eb.curvature) < 0;
        if (use_lattice) return rep.lattice[a] < rep.lattice[b];
        const auto& xa = rep.direct[a];
        const auto& xb = rep.direct[b];
        for (std::size_t k = 0; k < xa.size(); ++k)
            if (!num::eq(xa[k], xb[k])) return num::sign(xa[k] - xb[k]) < 0;
        return false;
    };
    std::stable_sort(perm.begin(), perm.end(), less);
    std::vector<int> where(n);
    for (std::size_t i = 0; i < n; ++i) where[perm[i]] = int(i);
    std::vector<OrbitEntry<S>> e;
    e.reserve(n);
    for (auto p : perm) {
        auto x = rep.entries[p];
        if (x.parent >= 0) x.parent = where[x.parent];
        e.push_back(x);
    }
    rep.entries = std::move(e);
    if (use_lattice) {
        std::vector<IKey> l;
        l.reserve(n);
        for (auto p : perm) l.push_back(rep.lattice[p]);
        rep.lattice = std::move(l);
    } else {
        std::vector<Vec<S>> d;
        d.reserve(n);
        for (auto p : perm) d.push_back(std::move(rep.direct[p]));
        rep.direct = std::move(d);
    }
}

}  // namespace detail

// Breadth-first orbit of the seed balls under the generators. A depth bound is mandatory;
// children whose |curvature| exceeds max_curvature are dropped.
template <class S>
OrbitReport<S> orbit(const std::vector<Ball<S>>& seeds, const std::vector<LorentzMap<S>>& gens, OrbitBound bound,
                     OrbitOptions opt = {}) {
    if (bound.depth < 0) throw std::invalid_argument("orbit enumeration needs a depth bound");
    if (seeds.empty()) throw std::invalid_argument("orbit of an empty seed");
    OrbitReport<S> rep;
    rep.seed = seeds;
    rep.bound = bound;
    std::size_t n = seeds[0].x.size();
    auto kvec = curvature_functional<S>(n);
    double kmax = bound.max_curvature ? *bound.max_curvature + 1e-9 : std::numeric_limits<double>::infinity();

    std::optional<detail::LatticeFrame<S>> frame;
    if (opt.lattice) frame = detail::lattice_frame(seeds, gens);

    if (frame) {
        rep.engine = "lattice";
        std::size_t r = frame->rank;
        Vec<S> f(r, num::from_int<S>(0));
        std::vector<double> fd(r);
        for (std::size_t k = 0; k < r; ++k) {
            f[k] = curvature(frame->basis.column(k));
            fd[k] = num::to_double(f[k]);
        }
        const auto& G = frame->gens;
        auto apply = [&](std::size_t g, const detail::IKey& c) {
            detail::IKey out{};
            for (std::size_t i = 0; i < r; ++i) out[i] = detail::checked_dot(&G[g][i * r], c, r);
            return out;
        };
        auto accept = [&](const detail::IKey& c) {
            double k = 0;
            for (std::size_t i = 0; i < r; ++i) k += fd[i] * double(c[i]);
            return std::abs(k) <= kmax;
        };
        auto key = [](const detail::IKey& c) { return c; };
        auto res = detail::breadth_first<detail::IKey, detail::IKey, detail::IKeyHash>(frame->seeds, G.size(), bound.depth,
                                                                                      key, apply, accept, opt.threads);
        rep.to_ambient = frame->basis;
        rep.lattice = std::move(res.items);
        for (std::size_t i = 0; i < rep.lattice.size(); ++i) {
            S k = num::from_int<S>(0);
            for (std::size_t j = 0; j < r; ++j)
                if (rep.lattice[i][j]) k += f[j] * num::from_int<S>(rep.lattice[i][j]);
            rep.entries.push_back({res.depth[i], k, res.parent[i], res.gen[i]});
        }
    } else if constexpr (std::is_same_v<S, double>) {
        rep.engine = "float";
        double grid = std::max(float_eps(), 1e-12) * 16;
        auto key = [grid](const Vec<double>& x) {
            detail::QuantKey q;
            for (double v : x) q.q.push_back(std::llround(v / grid));
            return q;
        };
        auto apply = [&](std::size_t g, const Vec<double>& x) { return gens[g] * x; };
        auto accept = [&](const Vec<double>& x) { return std::abs(curvature(x)) <= kmax; };
        std::vector<Vec<double>> sx;
        for (auto& b : seeds) sx.push_back(b.x);
        auto res = detail::breadth_first<Vec<double>, detail::QuantKey, detail::QuantHash>(sx, gens.size(), bound.depth,
                                                                                          key, apply, accept, opt.threads);
        rep.direct = std::move(res.items);
        for (std::size_t i = 0; i < rep.direct.size(); ++i)
            rep.entries.push_back({res.depth[i], curvature(rep.direct[i]), res.parent[i], res.gen[i]});
    } else {
        rep.engine = "exact";
        auto key = [](const Vec<S>& x) { return x; };
        auto apply = [&](std::size_t g, const Vec<S>& x) { return gens[g] * x; };
        auto accept = [&](const Vec<S>& x) { return std::abs(num::to_double(curvature(x))) <= kmax; };
        std::vector<Vec<S>> sx;
        for (auto& b : seeds) sx.push_back(b.x);
        auto res = detail::breadth_first<Vec<S>, Vec<S>, detail::VecHash<S>>(sx, gens.size(), bound.depth, key, apply,
                                                                            accept, opt.threads);
        rep.direct = std::move(res.items);
        for (std::size_t i = 0; i < rep.direct.size(); ++i)
            rep.entries.push_back({res.depth[i], curvature(rep.direct[i]), res.parent[i], res.gen[i]});
    }
    detail::sort_report(rep);
    rep.per_depth.assign(std::size_t(bound.depth) + 1, 0);
    for (auto& e : rep.entries) rep.per_depth[e.depth]++;
    while (rep.per_depth.size() > 1 && rep.per_depth.back() == 0) rep.per_depth.pop_back();
    return rep;
}

template <class S>
OrbitReport<S> orbit(const Packing<S>& seed, const ApollonianGroup<S>& g, OrbitBound bound, OrbitOptions opt = {}) {
    auto r = orbit(seed.balls, g.gens, bound, opt);
    r.labels = g.labels;
    return r;
}

// All words of length <= depth applied to every seed, deduplicated: the reference the
// breadth-first engine is checked against. Returns (ball, first depth) pairs.
template <class S>
std::map<std::vector<std::string>, int> brute_force_orbit(const std::vector<Ball<S>>& seeds,
                                                          const std::vector<LorentzMap<S>>& gens, int depth) {
    std::map<std::vector<std::string>, int> seen;
    auto key = [](const Vec<S>& x) {
        std::vector<std::string> k;
        for (auto& v : x) k.push_back(num::str(v));
        return k;
    };
    std::vector<Vec<S>> level;
    for (auto& b : seeds) {
        level.push_back(b.x);
        seen.emplace(key(b.x), 0);
    }
    for (int d = 1; d <= depth; ++d) {
        std::vector<Vec<S>> next;
        for (auto& x : level)
            for (auto& g : gens) {
                auto y = g * x;
                seen.emplace(key(y), d);
                next.push_back(std::move(y));
            }
        level = std::move(next);
    }
    return seen;
}

template <class S>
std::map<std::vector<std::string>, int> orbit_key_set(const OrbitReport<S>& rep) {
    std::map<std::vector<std::string>, int> out;
    for (std::size_t i = 0; i < rep.size(); ++i) {
        std::vector<std::string> k;
        for (auto& v : rep.ball(i).x) k.push_back(num::str(v));
        out.emplace(std::move(k), rep.entries[i].depth);
    }
    return out;
}

// ---------------------------------------------------------------------------------------
// Integrality criteria

namespace detail {

template <class S>
bool integral_root(const S& v) {
    if (num::sign(v) < 0) throw not_realizable("negative radicand: curvatures not realizable");
    if (!num::is_integer(v)) return false;
    auto r = num::sqrt(v);
    return r && num::is_integer(*r);
}

template <class S>
bool all_integers(const Vec<S>& k) {
    for (auto& v : k)
        if (!num::is_integer(v)) return false;
    return true;
}

}  // namespace detail

// Four pairwise tangent spheres of an orthoplicial packing.
template <class S>
bool is_integral_orthoplicial(const Vec<S>& k) {
    detail::require_arity(k, 4, "orthoplicial integrality");
    S t = simplicial(k);
    bool r = detail::integral_root(t);
    return detail::all_integers(k) && r;
}

// Three pairwise tangent disks of an octahedral packing.
template <class S>
bool is_integral_octahedral(const Vec<S>& k) {
    detail::require_arity(k, 3, "octahedral integrality");
    bool r = detail::integral_root(num::from_int<S>(2) * simplicial(k));
    return detail::all_integers(k) && r;
}

// Three consecutive tangent disks (middle one tangent to both) of a cubical packing.
template <class S>
bool is_integral_cubical(const Vec<S>& k) {
    detail::require_arity(k, 3, "cubical integrality");
    bool r = detail::integral_root(num::from_int<S>(2) * hypercubical(k));
    return detail::all_integers(k) && r;
}

// Four mutually tangent disks.
template <class S>
bool is_integral_tetrahedral(const Vec<S>& k) {
    detail::require_arity(k, 4, "tetrahedral integrality");
    S t = simplicial(k);
    if (num::sign(t) < 0) throw not_realizable("not a Descartes quadruple");
    return detail::all_integers(k) && num::is_zero(t);
}

// ---------------------------------------------------------------------------------------
// Census

template <class S>
struct Census {
    std::vector<std::pair<S, std::size_t>> counts;  // ascending curvature
    std::vector<std::int64_t> missing;             // integers in range with no ball
    std::size_t non_integral = 0;
};

template <class S>
Census<S> curvature_census(const OrbitReport<S>& rep, double lo, double hi) {
    Census<S> c;
    std::vector<S> ks;
    for (auto& e : rep.entries) {
        double v = num::to_double(e.curvature);
        if (v < lo - 1e-9 || v > hi + 1e-9) continue;
        ks.push_back(e.curvature);
    }
    std::sort(ks.begin(), ks.end(), [](const S& a, const S& b) { return num::sign(a - b) < 0; });
    for (auto& k : ks) {
        if (!c.counts.empty() && num::eq(c.counts.back().first, k))
            c.counts.back().second++;
        else
            c.counts.push_back({k, 1});
        if (!num::is_integer(k)) c.non_integral++;
    }
    std::set<std::int64_t> present;
    for (auto& [k, n] : c.counts)
        if (num::is_integer(k)) present.insert(std::llround(num::to_double(k)));
    if (hi >= lo)
        for (auto v = std::int64_t(std::ceil(lo - 1e-9)); v <= std::int64_t(std::floor(hi + 1e-9)); ++v)
            if (!present.count(v)) c.missing.push_back(v);
    return c;
}

}  // namespace polypack
