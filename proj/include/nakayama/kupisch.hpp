#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "zmatrix.hpp"

namespace nakayama {

enum class Kind { Line, Cycle };

/// Representative of x mod n in {1..n}; residue 0 is represented by n.
inline int phi(int n, int x) {
    int r = x % n;
    if (r <= 0) r += n;
    return r;
}

/// Admissibility: 2 <= c_j <= c_{j+1}+1 for j < n, and c_n <= c_1 + 1.
inline bool is_admissible(const std::vector<int>& c) {
    const int n = static_cast<int>(c.size());
    if (n < 1) return false;
    for (int v : c)
        if (v < 1) return false;
    for (int j = 0; j + 1 < n; ++j)
        if (c[j] < 2 || c[j] > c[j + 1] + 1) return false;
    return c[n - 1] <= c[0] + 1;
}

/// A connected Nakayama algebra given by its admissible sequence
/// (c_1, ..., c_n) of projective lengths. Immutable once constructed.
/// Entries index 1-based through c(j); kind is Line iff c_n = 1.
class KupischSeries {
public:
    explicit KupischSeries(std::vector<int> entries) : c_(std::move(entries)) {
        const int n = static_cast<int>(c_.size());
        if (n < 1) throw InadmissibleSequence("sequence must be nonempty");
        for (int v : c_)
            if (v < 1) throw InadmissibleSequence("entries must be positive");
        for (int j = 0; j + 1 < n; ++j)
            if (c_[j] == 1)
                throw MisplacedOne("entry 1 at position " + std::to_string(j + 1) +
                                   " of " + std::to_string(n) + " is not admissible");
        for (int j = 0; j + 1 < n; ++j)
            if (c_[j] > c_[j + 1] + 1)
                throw InadmissibleSequence("c_" + std::to_string(j + 1) + " = " +
                                           std::to_string(c_[j]) + " exceeds c_" +
                                           std::to_string(j + 2) + "+1");
        if (c_[n - 1] > c_[0] + 1)
            throw InadmissibleSequence("c_n = " + std::to_string(c_[n - 1]) +
                                       " exceeds c_1+1");
        kind_ = (c_[n - 1] == 1) ? Kind::Line : Kind::Cycle;
    }

    /// Comma-separated positive integers, e.g. "3,4,4". Whitespace around entries is ignored.
    static KupischSeries parse(std::string_view text) {
        std::vector<int> entries;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - pos);
            while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
                tok.remove_prefix(1);
            while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
                tok.remove_suffix(1);
            if (tok.empty()) throw ParseError("empty entry in sequence");
            int value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw ParseError("not a decimal integer: '" + std::string(tok) + "'");
            if (value < 1) throw ParseError("entries must be positive: " + std::string(tok));
            entries.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return KupischSeries(std::move(entries));
    }

    int n() const { return static_cast<int>(c_.size()); }
    Kind kind() const { return kind_; }
    bool is_cycle() const { return kind_ == Kind::Cycle; }
    bool is_line() const { return kind_ == Kind::Line; }

    /// l(P_j), 1-based.
    int c(int j) const { return c_[static_cast<std::size_t>(j - 1)]; }

    int max_loewy() const { return *std::max_element(c_.begin(), c_.end()); }

    const std::vector<int>& entries() const { return c_; }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c_[i]);
        }
        return s;
    }

    friend bool operator==(const KupischSeries&, const KupischSeries&) = default;
    friend bool operator<(const KupischSeries& a, const KupischSeries& b) {
        return a.c_ < b.c_;
    }

private:
    std::vector<int> c_;
    Kind kind_;
};

inline void require_vertex(const KupischSeries& a, int j) {
    if (j < 1 || j > a.n())
        throw InvalidModule("vertex index " + std::to_string(j) + " out of 1.." +
                            std::to_string(a.n()));
}

/// Vertex reached at position x along the quiver: cyclic wrap for cycle
/// algebras; for line algebras positions never leave 1..n (admissibility),
/// so escaping is an internal bug rather than wrapped silently.
inline int vertex_at(const KupischSeries& a, int x) {
    if (a.is_cycle()) return phi(a.n(), x);
    if (x < 1 || x > a.n())
        throw InternalInconsistency("line index " + std::to_string(x) + " escapes 1.." +
                                    std::to_string(a.n()));
    return x;
}

inline bool is_self_injective(const KupischSeries& a) {
    if (a.n() == 1) return true; // (1) semisimple, (c) cyclic self-injective
    if (a.is_line()) return false;
    const auto& e = a.entries();
    return std::all_of(e.begin(), e.end(), [&](int v) { return v == e.front(); });
}

namespace detail {

/// Rotation offset p and rotated entries with rotated[i] = e[(i+p) mod n],
/// such that the result is normalized (all equal, or minimal first entry with
/// c_n = c_1 + 1). Lexicographically smallest rotation wins; ties take the
/// smallest offset.
inline std::pair<std::vector<int>, int> normalized_rotation(const std::vector<int>& e) {
    const int n = static_cast<int>(e.size());
    const int min = *std::min_element(e.begin(), e.end());
    if (std::all_of(e.begin(), e.end(), [&](int v) { return v == min; }))
        return {e, 0};
    std::vector<int> best;
    int best_offset = -1;
    for (int p = 0; p < n; ++p) {
        if (e[p] != min || e[(p + n - 1) % n] != min + 1) continue;
        std::vector<int> rotated(n);
        for (int i = 0; i < n; ++i) rotated[i] = e[(i + p) % n];
        if (best_offset < 0 || rotated < best) {
            best = std::move(rotated);
            best_offset = p;
        }
    }
    if (best_offset < 0)
        throw InternalInconsistency("admissible cycle sequence has no normalized rotation");
    return {best, best_offset};
}

} // namespace detail

struct Normalized {
    KupischSeries series;
    /// series entry i (1-based) is the input entry phi(n, i + rotation_offset).
    int rotation_offset = 0;
};

/// Line sequences are already normalized; cycle sequences are rotated so that
/// either all entries agree or c_1 is minimal with c_n = c_1 + 1.
inline Normalized normalize(const KupischSeries& a) {
    if (a.is_line()) return {a, 0};
    auto [entries, offset] = detail::normalized_rotation(a.entries());
    return {KupischSeries(std::move(entries)), offset};
}

/// theta(j) = phi_n(j + c_j). Cycle algebras only.
inline int theta(const KupischSeries& a, int j) {
    if (a.is_line()) throw LineUnsupported("theta is defined for cycle algebras only");
    require_vertex(a, j);
    return phi(a.n(), j + a.c(j));
}

/// Stabilization data of the descending chain Im theta^0 >= Im theta >= ...
struct ThetaData {
    /// Minimal d with Im theta^d = Im theta^{d+1}.
    int d = 0;
    /// The stable image; theta restricts to a bijection on it.
    std::vector<int> regular;
    std::map<int, int> theta_on_regular;
    /// Length of the theta-cycle through each regular element.
    std::map<int, int> orbit_length;

    bool is_regular(int j) const {
        return std::binary_search(regular.begin(), regular.end(), j);
    }
};

inline ThetaData theta_data(const KupischSeries& a) {
    if (a.is_line()) throw LineUnsupported("theta_data is defined for cycle algebras only");
    const int n = a.n();
    std::set<int> image;
    for (int j = 1; j <= n; ++j) image.insert(j);
    int d = 0;
    for (;;) {
        std::set<int> next;
        for (int j : image) next.insert(theta(a, j));
        if (next == image) break;
        image = std::move(next);
        ++d;
    }
    ThetaData td;
    td.d = d;
    td.regular.assign(image.begin(), image.end());
    for (int j : td.regular) td.theta_on_regular[j] = theta(a, j);
    std::set<int> placed;
    for (int j : td.regular) {
        if (placed.count(j)) continue;
        std::vector<int> cycle;
        int i = j;
        do {
            cycle.push_back(i);
            i = td.theta_on_regular.at(i);
        } while (i != j);
        for (int v : cycle) {
            td.orbit_length[v] = static_cast<int>(cycle.size());
            placed.insert(v);
        }
    }
    return td;
}

/// Cartan matrix: entry (j, k) is the multiplicity of S_j among the c_k
/// composition factors of P_k (0-based storage, 1-based indices shifted down).
inline IntMatrix cartan(const KupischSeries& a) {
    const int n = a.n();
    IntMatrix m(n, n);
    for (int k = 1; k <= n; ++k)
        for (int t = 0; t < a.c(k); ++t)
            m.at(vertex_at(a, k + t) - 1, k - 1) += 1;
    return m;
}

/// l(P*_j) = l(e_j A) for each j, as the j-th row sum of the Cartan matrix;
/// 0-based vector, entry j-1 belongs to vertex j.
inline std::vector<int> dual_lengths(const KupischSeries& a) {
    const IntMatrix m = cartan(a);
    std::vector<int> out(static_cast<std::size_t>(a.n()));
    for (int j = 0; j < a.n(); ++j) {
        BigInt sum = 0;
        for (int k = 0; k < a.n(); ++k) sum += m.at(j, k);
        out[static_cast<std::size_t>(j)] = static_cast<int>(sum);
    }
    return out;
}

namespace detail {

inline bool theta_perfect_with(const KupischSeries& a, const ThetaData& td,
                               const std::vector<int>& dual, int j) {
    if (!td.is_regular(j)) return false;
    // l(P_i) = l(P*_{theta(i)}) around the whole theta-cycle of j
    int i = j;
    do {
        if (a.c(i) != dual[static_cast<std::size_t>(theta(a, i) - 1)]) return false;
        i = td.theta_on_regular.at(i);
    } while (i != j);
    return true;
}

} // namespace detail

inline bool is_theta_perfect(const KupischSeries& a, int j) {
    if (a.is_line())
        throw LineUnsupported("theta-perfectness is defined for cycle algebras only");
    require_vertex(a, j);
    return detail::theta_perfect_with(a, theta_data(a), dual_lengths(a), j);
}

/// Kupisch series of the opposite algebra: dual lengths arranged along the
/// reversed quiver, then normalized. The Cartan matrix of the result must be
/// the transpose of cartan(a) up to a simultaneous row/column permutation;
/// failure of that property signals a bug.
inline KupischSeries opposite(const KupischSeries& a) {
    const int n = a.n();
    const std::vector<int> dual = dual_lengths(a);
    // sigma[i-1] is the source vertex presented at position i of the reversed quiver
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::vector<int> raw(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int s = a.is_cycle() ? phi(n, 2 - i + 2 * n) : n + 1 - i;
        sigma[static_cast<std::size_t>(i - 1)] = s;
        raw[static_cast<std::size_t>(i - 1)] = dual[static_cast<std::size_t>(s - 1)];
    }
    std::vector<int> entries = raw;
    std::vector<int> perm = sigma;
    if (!raw.empty() && raw.back() != 1) {
        if (!is_admissible(raw))
            throw InternalInconsistency("opposite sequence is inadmissible before normalization");
        auto [rot, offset] = detail::normalized_rotation(raw);
        entries = rot;
        for (int i = 0; i < n; ++i)
            perm[static_cast<std::size_t>(i)] = sigma[static_cast<std::size_t>((i + offset) % n)];
    }
    KupischSeries result = [&] {
        try {
            return KupischSeries(entries);
        } catch (const InadmissibleSequence& e) {
            throw InternalInconsistency(std::string("opposite sequence inadmissible: ") + e.what());
        }
    }();
    const IntMatrix ca = cartan(a);
    const IntMatrix cb = cartan(result);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (cb.at(i, k) != ca.at(perm[static_cast<std::size_t>(k)] - 1,
                                     perm[static_cast<std::size_t>(i)] - 1))
                throw InternalInconsistency("opposite algebra fails the Cartan transpose check");
    return result;
}

} // namespace nakayama
