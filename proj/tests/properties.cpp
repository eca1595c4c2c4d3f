#include "properties.hpp"

#include <random>

#include "sally/errors.hpp"
#include "sally/ring_lang.hpp"
#include "test_support.hpp"

namespace sally::testing {

PropertyTally ring_axioms(std::uint32_t seed, int trials) {
    auto ring = make_poly_ring({"x", "y", "z"}, 32003);
    std::mt19937 rng(seed);
    PropertyTally t;
    const Monomial shift(3, {1, 0, 2});
    for (int trial = 0; trial < trials; ++trial) {
        Poly a = random_poly(ring, rng, 4, 3);
        Poly b = random_poly(ring, rng, 4, 3);
        Poly c = random_poly(ring, rng, 4, 3);
        const std::string at = " (trial " + std::to_string(trial) + ")";
        t.expect((a + b) + c == a + (b + c), "additive associativity" + at);
        t.expect((a * b) * c == a * (b * c), "multiplicative associativity" + at);
        t.expect(a * (b + c) == a * b + a * c, "distributivity" + at);
        t.expect(a * b == b * a, "commutativity" + at);
        t.expect((a + (-a)).is_zero(), "additive inverse" + at);
        t.expect(a - b == a + (-b), "subtraction" + at);
        t.expect(a * Poly::constant(ring, 1) == a, "unit" + at);
        t.expect(a.sub_mul(3, shift, b) == a - b.times(shift, 3), "fused multiply-subtract" + at);
        ++t.cases;
    }
    return t;
}

PropertyTally ideal_identities(std::uint32_t seed, int trials) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> nvars_d(2, 3), ngens_d(1, 3), deg_d(1, 3), terms_d(1, 3);
    PropertyTally t;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<std::string> names{"a", "b", "c"};
        names.resize(static_cast<std::size_t>(nvars_d(rng)));
        auto ring = RingSpec::create(make_poly_ring(names, 32003), {});
        auto pr = ring->poly_ring();
        auto random_ideal = [&] {
            std::vector<Poly> gens;
            int g = ngens_d(rng);
            for (int i = 0; i < g; ++i)
                gens.push_back(random_form(pr, rng, static_cast<unsigned>(deg_d(rng)), terms_d(rng)));
            return IdealHandle(ring, gens);
        };
        auto J = random_ideal(), K = random_ideal(), H = random_ideal();
        const std::string at = " (trial " + std::to_string(trial) + ")";

        auto JK = ideal_intersect(J, K);
        t.expect(J.contains(JK) && K.contains(JK), "intersection inside both" + at);
        t.expect(JK.contains(ideal_product(J, K)), "product inside intersection" + at);
        t.expect(ideal_sum(J, K).contains(J), "sum contains summand" + at);
        t.expect(ideal_equal(ideal_sum(J, K), ideal_sum(K, J)), "sum commutes" + at);

        auto colon = ideal_quotient(J, H).ideal;
        t.expect(J.contains(ideal_product(colon, H)), "(J:H)H inside J" + at);
        t.expect(colon.contains(J), "J inside (J:H)" + at);

        std::vector<Poly> gb(J.gb().begin(), J.gb().end());
        t.expect(same_basis(groebner_basis(gb), gb), "basis of a basis" + at);
        std::vector<Poly> rev(J.gens().rbegin(), J.gens().rend());
        t.expect(same_basis(groebner_basis(rev), gb), "basis independent of generator order" + at);

        Poly f = random_form(pr, rng, 3, 4), g = random_form(pr, rng, 3, 4);
        Poly nf = J.normal_form(f);
        t.expect(J.normal_form(nf) == nf, "normal form idempotent" + at);
        t.expect(J.normal_form(f + g.scaled(5)) == nf + J.normal_form(g).scaled(5), "normal form linear" + at);
        t.expect(J.contains(f - nf), "f - nf(f) in J" + at);
        ++t.cases;
    }
    return t;
}

PropertyTally catalog_round_trip() {
    PropertyTally t;
    for (const auto& inst : catalog()) {
        const std::string at = " (" + inst.name + ")";
        std::string text = serialize(inst);
        auto back = to_instance(parse_source(text), inst.name);
        t.expect(back.ring->characteristic() == inst.ring->characteristic(), "characteristic" + at);
        t.expect(back.ring->poly_ring()->names == inst.ring->poly_ring()->names, "variables" + at);
        t.expect(same_basis(std::vector<Poly>(back.ring->defining_basis().begin(), back.ring->defining_basis().end()),
                            std::vector<Poly>(inst.ring->defining_basis().begin(), inst.ring->defining_basis().end())),
                 "defining ideal" + at);
        auto rebase = [&](const IdealHandle& h) {
            std::vector<Poly> gens;
            for (const Poly& g : h.gens())
                gens.push_back(Poly::from_canonical(back.ring->poly_ring(),
                                                    std::vector<Term>(g.terms().begin(), g.terms().end())));
            return IdealHandle(back.ring, gens);
        };
        t.expect(ideal_equal(back.ideal, rebase(inst.ideal)), "ideal I" + at);
        t.expect(ideal_equal(back.reduction, rebase(inst.reduction)), "ideal Q" + at);
        t.expect(back.adjoin.has_value() == inst.adjoin.has_value(), "presence of h" + at);
        if (inst.adjoin && back.adjoin) t.expect(ideal_equal(*back.adjoin, rebase(*inst.adjoin)), "ideal h" + at);
        t.expect(back.expected == inst.expected, "expectations" + at);
        t.expect(serialize(back) == text, "serialization is a fixed point" + at);
        ++t.cases;
    }
    return t;
}

PropertyTally parser_fuzz(std::uint32_t seed, int trials) {
    std::mt19937 rng(seed);
    std::vector<std::string> seeds;
    for (const auto& inst : catalog()) seeds.push_back(serialize(inst));
    const std::string alphabet = "xyzv1z2 0123456789+-*^,=#\n\t()!abcIQhmodidealexpectcharvarsorder";
    PropertyTally t;
    int parsed = 0;
    for (int trial = 0; trial < trials; ++trial) {
        std::string text = seeds[rng() % seeds.size()];
        int edits = static_cast<int>(rng() % 4) + 1;
        for (int k = 0; k < edits && !text.empty(); ++k) {
            std::size_t at = rng() % text.size();
            switch (rng() % 3) {
                case 0: text.erase(at, rng() % 6 + 1); break;
                case 1: text.insert(at, 1, alphabet[rng() % alphabet.size()]); break;
                default: text[at] = alphabet[rng() % alphabet.size()]; break;
            }
        }
        if (trial % 10 == 0) {
            text.clear();
            for (int k = 0; k < 40; ++k) text += static_cast<char>(rng() % 256);
        }
        try {
            parse_source(text);
            ++parsed;
        } catch (const ParseError&) {
        } catch (const std::exception& e) {
            t.failures.push_back(std::string("non-parse exception: ") + e.what());
        }
        ++t.cases;
    }
    t.expect(parsed > 0 && parsed < trials, "fuzzer produced both accepted and rejected inputs");
    return t;
}

}  // namespace sally::testing
