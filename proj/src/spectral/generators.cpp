#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tuza/spectral.hpp"

namespace tuza {

namespace {

// GF(p^k) with elements encoded as base-p digit strings of polynomials of
// degree < k; multiplication reduces modulo a monic irreducible of degree k.
class GaloisField {
public:
    explicit GaloisField(std::size_t q) : q_(q) {
        if (q < 2) throw std::invalid_argument("field order must be at least 2");
        std::size_t p = 2;
        while (q % p) ++p;
        std::size_t k = 0, rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++k;
        }
        if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        p_ = p;
        k_ = k;
        if (k_ > 1) modulus_ = find_irreducible();
        mul_.assign(q * q, 0);
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = 0; b < q; ++b) mul_[a * q + b] = slow_mul(a, b);
    }

    std::size_t order() const { return q_; }
    std::size_t add(std::size_t a, std::size_t b) const {
        std::size_t out = 0, scale = 1;
        for (std::size_t i = 0; i < k_; ++i) {
            out += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return out;
    }
    std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * q_ + b]; }

private:
    std::vector<std::size_t> digits(std::size_t a, std::size_t len) const {
        std::vector<std::size_t> d(len, 0);
        for (std::size_t i = 0; i < len && a; ++i, a /= p_) d[i] = a % p_;
        return d;
    }

    // Product of polynomials (coefficient vectors) reduced by modulus_ when k > 1.
    std::size_t slow_mul(std::size_t a, std::size_t b) const {
        if (k_ == 1) return (a * b) % p_;
        const auto da = digits(a, k_), db = digits(b, k_);
        std::vector<std::size_t> prod(2 * k_ - 1, 0);
        for (std::size_t i = 0; i < k_; ++i)
            for (std::size_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (std::size_t deg = prod.size(); deg-- > k_;) {
            const std::size_t coef = prod[deg];
            if (!coef) continue;
            // x^k = -(lower terms of modulus)
            for (std::size_t i = 0; i < k_; ++i)
                prod[deg - k_ + i] = (prod[deg - k_ + i] + coef * (p_ - modulus_[i])) % p_;
            prod[deg] = 0;
        }
        std::size_t out = 0;
        for (std::size_t i = k_; i-- > 0;) out = out * p_ + prod[i];
        return out;
    }

    // Lowest monic irreducible of degree k, by trial division against every
    // monic polynomial of degree <= k/2.
    std::vector<std::size_t> find_irreducible() const {
        const std::size_t count = q_;  // p^k choices for the lower coefficients
        for (std::size_t code = 0; code < count; ++code) {
            std::vector<std::size_t> f = digits(code, k_);
            f.push_back(1);
            if (is_irreducible(f)) {
                f.pop_back();
                return f;
            }
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    bool is_irreducible(const std::vector<std::size_t>& f) const {
        for (std::size_t deg = 1; deg <= k_ / 2; ++deg) {
            std::size_t combos = 1;
            for (std::size_t i = 0; i < deg; ++i) combos *= p_;
            for (std::size_t code = 0; code < combos; ++code) {
                std::vector<std::size_t> g = digits(code, deg);
                g.push_back(1);
                if (divides(g, f)) return false;
            }
        }
        return true;
    }

    bool divides(const std::vector<std::size_t>& g, std::vector<std::size_t> f) const {
        const std::size_t dg = g.size() - 1;
        for (std::size_t deg = f.size() - 1; deg >= dg; --deg) {
            const std::size_t coef = f[deg];
            if (coef)
                for (std::size_t i = 0; i <= dg; ++i) f[deg - dg + i] = (f[deg - dg + i] + (p_ - coef) * g[i]) % p_;
            if (deg == dg) break;
        }
        return std::all_of(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(dg), [](std::size_t x) { return x == 0; });
    }

    std::size_t q_ = 0, p_ = 0, k_ = 0;
    std::vector<std::size_t> modulus_;  // lower coefficients of the monic modulus
    std::vector<std::size_t> mul_;
};

Graph petersen() {
    std::vector<std::array<int, 2>> pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.push_back({i, j});
    Graph g(pairs.size());
    for (Vertex u = 0; u < pairs.size(); ++u)
        for (Vertex v = u + 1; v < pairs.size(); ++v) {
            const auto& a = pairs[u];
            const auto& b = pairs[v];
            if (a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1]) g.add_edge(u, v);
        }
    return g;
}

// Robertson's pentagon/pentagram construction.
Graph hoffman_singleton() {
    Graph g(50);
    const auto pent = [](int h, int j) { return static_cast<Vertex>(5 * h + ((j % 5) + 5) % 5); };
    const auto gram = [](int i, int j) { return static_cast<Vertex>(25 + 5 * i + ((j % 5) + 5) % 5); };
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j) {
            g.add_edge(pent(h, j), pent(h, j + 1));
            g.add_edge(gram(h, j), gram(h, j + 2));
            for (int i = 0; i < 5; ++i) g.add_edge(pent(h, j), gram(i, h * i + j));
        }
    return g;
}

Graph cayley(std::size_t n, const std::vector<std::size_t>& gens) {
    if (n < 2) throw std::invalid_argument("cayley graph needs n >= 2");
    Graph g(n);
    for (std::size_t s : gens) {
        if (s % n == 0) throw std::invalid_argument("cayley generator must be nonzero mod n");
        for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + s) % n));
    }
    return g;
}

std::vector<std::size_t> parse_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoul(item));
    return out;
}

}  // namespace

Graph projective_incidence_graph(std::size_t q) {
    const GaloisField f(q);
    // Normalised representatives: first nonzero coordinate equal to 1.
    std::vector<std::array<std::size_t, 3>> points;
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) points.push_back({1, a, b});
    for (std::size_t b = 0; b < q; ++b) points.push_back({0, 1, b});
    points.push_back({0, 0, 1});
    const std::size_t np = points.size();
    Graph g(2 * np);
    for (Vertex i = 0; i < np; ++i)
        for (Vertex j = 0; j < np; ++j) {
            const auto& x = points[i];
            const auto& y = points[j];
            const std::size_t s = f.add(f.add(f.mul(x[0], y[0]), f.mul(x[1], y[1])), f.mul(x[2], y[2]));
            if (s == 0) g.add_edge(i, static_cast<Vertex>(np + j));
        }
    return g;
}

GeneratedGraph generate_triangle_free_expander(Family family, const GeneratorParams& params) {
    GeneratedGraph out;
    switch (family) {
        case Family::petersen:
            out.name = "petersen";
            out.graph = petersen();
            break;
        case Family::hoffman_singleton:
            out.name = "hoffman_singleton";
            out.graph = hoffman_singleton();
            break;
        case Family::projective_incidence:
            out.name = "pg2:" + std::to_string(params.q);
            out.graph = projective_incidence_graph(params.q);
            break;
        case Family::cayley_custom: {
            out.name = "cayley:" + std::to_string(params.n) + ":";
            for (std::size_t i = 0; i < params.generators.size(); ++i)
                out.name += (i ? "," : "") + std::to_string(params.generators[i]);
            out.graph = cayley(params.n, params.generators);
            break;
        }
    }
    if (count_triangles(out.graph) != 0) throw std::invalid_argument(out.name + " is not triangle-free");
    if (!out.graph.is_regular()) throw std::invalid_argument(out.name + " is not regular");
    out.t = out.graph.order();
    out.d = out.t ? out.graph.degree(0) : 0;
    out.spectrum = eigen_spectrum(out.graph);
    return out;
}

GeneratedGraph generate_by_name(const std::string& name) {
    if (name == "petersen") return generate_triangle_free_expander(Family::petersen);
    if (name == "hoffman_singleton") return generate_triangle_free_expander(Family::hoffman_singleton);
    if (name.rfind("pg2:", 0) == 0) {
        GeneratorParams p;
        p.q = std::stoul(name.substr(4));
        return generate_triangle_free_expander(Family::projective_incidence, p);
    }
    if (name.rfind("cayley:", 0) == 0) {
        const auto colon = name.find(':', 7);
        if (colon == std::string::npos) throw std::invalid_argument("expected cayley:<n>:<s1>,<s2>,...");
        GeneratorParams p;
        p.n = std::stoul(name.substr(7, colon - 7));
        p.generators = parse_list(name.substr(colon + 1));
        return generate_triangle_free_expander(Family::cayley_custom, p);
    }
    throw std::invalid_argument("unknown generator '" + name + "'");
}

}  // namespace tuza
