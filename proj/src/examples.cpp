#include "sally/examples.hpp"

#include <algorithm>

#include "sally/errors.hpp"

namespace sally {

std::string gno_name(unsigned m, unsigned d, const std::set<unsigned>& subset) {
    std::string s = "gno(m=" + std::to_string(m) + ",d=" + std::to_string(d) + ",L={";
    bool first = true;
    for (unsigned a : subset) {
        if (!first) s += ",";
        s += std::to_string(a);
        first = false;
    }
    return s + "})";
}

NamedInstance gno_family(unsigned m, unsigned d, const std::set<unsigned>& subset, std::uint32_t prime) {
    if (m == 0 || d == 0) throw StructuralError("gno_family: m and d must be positive");
    for (unsigned a : subset)
        if (a < 1 || a > m) throw StructuralError("gno_family: subset element " + std::to_string(a) + " not in 1.." + std::to_string(m));
    if (m + 2 * d + 1 > kMaxVars) throw StructuralError("gno_family: too many variables");

    std::vector<std::string> names;
    for (unsigned j = 1; j <= m; ++j) names.push_back("x" + std::to_string(j));
    names.push_back("y");
    for (unsigned i = 1; i <= d; ++i) names.push_back("v" + std::to_string(i));
    for (unsigned i = 1; i <= d; ++i) names.push_back("z" + std::to_string(i));
    auto pr = make_poly_ring(names, prime);

    std::vector<Poly> xs, vs, zs;
    for (unsigned j = 0; j < m; ++j) xs.push_back(Poly::variable(pr, j));
    Poly y = Poly::variable(pr, m);
    for (unsigned i = 0; i < d; ++i) vs.push_back(Poly::variable(pr, m + 1 + i));
    for (unsigned i = 0; i < d; ++i) zs.push_back(Poly::variable(pr, m + 1 + d + i));

    std::vector<Poly> left = xs;
    left.push_back(y);
    std::vector<Poly> right = left;
    right.insert(right.end(), vs.begin(), vs.end());

    std::vector<Poly> defining;
    for (const Poly& a : left)
        for (const Poly& b : right) {
            Poly p = a * b;
            if (std::find(defining.begin(), defining.end(), p) == defining.end()) defining.push_back(p);
        }
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = i + 1; j < d; ++j) defining.push_back(vs[i] * vs[j]);
    for (unsigned i = 0; i < d; ++i) defining.push_back(vs[i] * vs[i] - zs[i] * y);

    auto ring = RingSpec::create(pr, defining);

    std::vector<Poly> igens = zs;
    for (unsigned a : subset) igens.push_back(xs[a - 1]);
    igens.insert(igens.end(), vs.begin(), vs.end());

    const auto md = static_cast<std::int64_t>(m), dd = static_cast<std::int64_t>(d);
    const auto lam = static_cast<std::int64_t>(subset.size());
    NamedInstance inst{gno_name(m, d, subset), ring, IdealHandle(ring, igens), IdealHandle(ring, zs),
                       IdealHandle(ring, {y}), {}};
    inst.expected["dim"] = dd;
    inst.expected["e0"] = md + dd + 2;
    inst.expected["e1"] = lam + dd + 1;
    for (unsigned i = 2; i <= d; ++i) inst.expected["e" + std::to_string(i)] = 0;
    inst.expected["colength"] = md - lam + 2;
    inst.expected["c"] = dd;
    inst.expected["r"] = 2;
    inst.expected["rr_gap"] = 1;
    return inst;
}

NamedInstance rossi_example(std::uint32_t prime) {
    auto pr = make_poly_ring({"x", "y", "z"}, prime);
    auto ring = RingSpec::create(pr, {});
    Poly x = ring->variable(0), y = ring->variable(1), z = ring->variable(2);
    NamedInstance inst{"rossi",
                       ring,
                       IdealHandle(ring, {x * x - y * y, x * x - z * z, x * y, y * z, z * x}),
                       IdealHandle(ring, {x * x - y * y, x * x - z * z, y * z}),
                       IdealHandle(ring, {z * z}),
                       {}};
    inst.expected["dim"] = 3;
    inst.expected["e2"] = 0;
    inst.expected["e3"] = 0;
    inst.expected["rr_gap"] = 1;
    return inst;
}

namespace {

struct Plane {
    RingSpecPtr ring;
    Poly x, y;
    explicit Plane(std::uint32_t prime) : ring(RingSpec::create(make_poly_ring({"x", "y"}, prime), {})) {
        x = ring->variable(0);
        y = ring->variable(1);
    }
    IdealHandle ideal(std::vector<Poly> gens) const { return IdealHandle(ring, std::move(gens)); }
};

Poly power(const Poly& f, unsigned n) {
    Poly r = Poly::constant(f.ring_ptr(), 1);
    for (unsigned i = 0; i < n; ++i) r = r * f;
    return r;
}

}  // namespace

std::vector<NamedInstance> catalog(std::uint32_t prime) {
    std::vector<NamedInstance> out;
    Plane k(prime);
    const Poly &x = k.x, &y = k.y;

    {
        auto q = k.ideal({x * x, y * y});
        out.push_back({"parameter", k.ring, q, q, std::nullopt, {{"dim", 2}, {"r", 0}, {"c", 0}}});
    }
    out.push_back({"huneke-boundary", k.ring, k.ideal({x * x, x * y, y * y}), k.ideal({x * x, y * y}), std::nullopt,
                   {{"dim", 2}}});
    out.push_back({"negative:not-a-reduction", k.ring, k.ideal({x, y}), k.ideal({x * x}), std::nullopt,
                   {{"dim", 2}, {"certifies", 0}}});
    out.push_back({"monomial-c1", k.ring, k.ideal({power(x, 3), x * x * y, power(y, 3)}),
                   k.ideal({power(x, 3), power(y, 3)}), std::nullopt, {{"dim", 2}}});
    out.push_back({"monomial-gap", k.ring, k.ideal({power(x, 4), power(x, 3) * y, x * power(y, 3), power(y, 4)}),
                   k.ideal({power(x, 4), power(y, 4)}), k.ideal({x * x * y * y}), {{"dim", 2}}});
    out.push_back(rossi_example(prime));

    for (unsigned m = 1; m <= 2; ++m)
        for (unsigned d = 1; d <= 3; ++d)
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                std::set<unsigned> subset;
                for (unsigned a = 0; a < m; ++a)
                    if (mask & (1u << a)) subset.insert(a + 1);
                out.push_back(gno_family(m, d, subset, prime));
            }

    std::sort(out.begin(), out.end(), [](const NamedInstance& a, const NamedInstance& b) { return a.name < b.name; });
    return out;
}

}  // namespace sally
