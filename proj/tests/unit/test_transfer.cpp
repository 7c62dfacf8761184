#include "doctest.h"
#include "pong/ainfty.hpp"
#include "pong/quotient.hpp"

using namespace pong;

namespace {

std::string mu_of(PongAlgebra& A, const std::string& inputs, int cap2 = 2)
{
    try {
        auto seq = parse_inputs(A, inputs, false);
        TransferEngine T(A, false, Weight::constant(A.m(), cap2));
        return describe_class(T, T.mu(seq.elems));
    } catch (const Error&) {
        return "error";
    }
}

}  // namespace

TEST_CASE("mu_6 of the fixture sequence is Omega")
{
    PongAlgebra A(4, 2);
    auto seq = parse_inputs(A, "v1, L2, L3, v4, R3, R2", false);
    CHECK(seq.start == parse_state("2,3"));
    CHECK(seq.elems.size() == 6);
    TransferEngine T(A, false, Weight::constant(4, 2));
    auto v = T.mu(seq.elems);
    CHECK(describe_class(T, v) == "Ω");
    CHECK(omega_power(T, v) == 1);
    auto sc = T.star_chain(seq.elems);
    CHECK_FALSE(sc.obstruction);
    CHECK(sc.top_class.cls == v.cls);
}

TEST_CASE("reordered inputs do not give Omega")
{
    PongAlgebra A(4, 2);
    CHECK(mu_of(A, "v1, L2, L3, v4, R3, R2") == "Ω");
    CHECK(mu_of(A, "v4, L2, L3, v1, R3, R2") == "0");
    // no idempotent chain
    CHECK(mu_of(A, "v1, L3, L2, v4, R3, R2") == "error");
    CHECK(mu_of(A, "v1, L2, L3, v4, R2, R3") == "error");
    // cyclic rotations still give Omega
    CHECK(mu_of(A, "L2, L3, v4, R3, R2, v1") == "Ω");
    CHECK(mu_of(A, "R2, v1, L2, L3, v4, R3") == "Ω");
}

TEST_CASE("mu_2 is the product on homology")
{
    PongAlgebra A(3, 1);
    TransferEngine T(A, true, Weight::constant(3, 4));
    size_t checked = 0;
    std::vector<PongElement> xs;
    for (int i = 1; i <= 3; ++i) xs.push_back(parse_input_token(A, "X" + std::to_string(i), true));
    for (auto& a0 : xs)
        for (auto& b0 : xs)
            for (uint32_t x : A.states()) {
                PongElement a = A.restrict_left(x, a0);
                if (a.zero()) continue;
                PongElement b = A.restrict_left(a.terms[0].g.image(), b0);
                if (b.zero()) continue;
                PongElement ab = T.multiply(a, b);
                auto v = T.mu({a, b});
                if (ab.zero()) {
                    CHECK(v.zero());
                } else {
                    CHECK(v.cls == T.class_of(ab).cls);
                }
                ++checked;
            }
    CHECK(checked > 0);
}

TEST_CASE("higher products are multilinear in Omega")
{
    PongAlgebra A(4, 2);
    auto seq = parse_inputs(A, "v1, L2, L3, v4, R3, R2", false);
    TransferEngine T(A, false, Weight::constant(4, 4));
    auto in = seq.elems;
    in[0] = T.multiply(A.restrict_left(seq.start, A.omega()), in[0]);
    REQUIRE(!in[0].zero());
    CHECK(omega_power(T, T.mu(in)) == 2);
}

TEST_CASE("input tokens")
{
    PongAlgebra A(4, 2);
    CHECK(parse_input_token(A, "L3", false) == parse_input_token(A, "L_{3,2}", false));
    CHECK(parse_input_token(A, "R3", false) == parse_input_token(A, "R_{2,3}", false));
    CHECK(parse_input_token(A, "X2", false) == parse_input_token(A, "X_{1,2}", false));
    CHECK(parse_input_token(A, "Omega", false) == A.omega());
    CHECK(parse_input_token(A, "U2", false) == A.U(2));
    CHECK_THROWS_AS(parse_input_token(A, "v9", false), Error);
    CHECK_THROWS_AS(parse_input_token(A, "Q1", false), Error);
    CHECK_THROWS_AS(parse_inputs(A, " ", false), Error);
}

TEST_CASE("general sequences and star chains")
{
    for (auto [m, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}}) {
        auto r = verify_mu_sequence(m, k);
        CHECK(r.ok());
        CHECK(int(r.inputs.size()) == 2 * m - 2 * k);
        CHECK(r.result == "Ω");
    }
    for (int m : {3, 4})
        for (auto& s : star_identities(m)) {
            CHECK(s.chain_ok);
            CHECK(s.same_class);
        }
}

TEST_CASE("sum over permutations")
{
    auto r3 = verify_perm_sum(3);
    CHECK(r3.ok());
    CHECK(r3.permutations == 6);
    auto r4 = verify_perm_sum(4, 2);
    CHECK(r4.ok());
    CHECK(r4.permutations == 24);
    CHECK(r4.lower_checked == 4);
    CHECK(r4.result == verify_perm_sum(4, 1).result);
}

TEST_CASE("degenerate cases")
{
    for (int m = 2; m <= 4; ++m) {
        auto r = verify_degenerate(m, 4);
        CHECK(r.ok());
        CHECK(r.p0_pieces > 0);
        CHECK(r.pm_pieces > 0);
    }
}
