#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adjhopf/constructions.hpp"
#include "test_util.hpp"

using namespace adjhopf;
using testutil::error_code;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("named group families") {
    CHECK(FiniteGroup::cyclic(1).order() == 1);
    auto s3 = FiniteGroup::symmetric(3);
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    CHECK(FiniteGroup::cyclic(5).is_abelian());
    CHECK(FiniteGroup::dihedral(4).order() == 8);
    CHECK(FiniteGroup::dihedral(2).is_abelian()); // Klein four-group
    CHECK_FALSE(FiniteGroup::dihedral(3).is_abelian());
    CHECK(FiniteGroup::from_spec("s3").order() == 6);
    CHECK(FiniteGroup::from_spec("c4").order() == 4);
    CHECK(FiniteGroup::from_spec("d5").order() == 10);
    CHECK(error_code([] { FiniteGroup::from_spec("x3"); }) == "ParseError");
    CHECK(error_code([] { FiniteGroup::from_spec("c"); }) == "ParseError");
    CHECK(error_code([] { FiniteGroup::from_spec("c0"); }) == "ParseError");
}

TEST_CASE("broken tables are rejected with a witness") {
    // swap one entry of Z3's table to break associativity
    auto z3 = FiniteGroup::cyclic(3);
    auto table = z3.table();
    table[1][1] = 1; // g*g = g (but g*e = g already), breaks the group laws
    const std::string code = error_code([&] { FiniteGroup({"e", "g", "g2"}, table); });
    CHECK(code == "NotAGroup");
    try {
        FiniteGroup({"e", "g", "g2"}, table);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("at (") != std::string::npos);
    }
}

TEST_CASE("S3 is enumerated in lexicographic one-line order") {
    auto s3 = FiniteGroup::symmetric(3);
    const std::vector<std::string> want = {"123", "132", "213", "231", "312", "321"};
    CHECK(s3.labels() == want);
    CHECK(s3.identity() == 0);
}

TEST_CASE("conjugation in S3") {
    auto s3 = FiniteGroup::symmetric(3);
    // (1 2) = one-line 213 = index 2; (1 2 3) = 231 = index 3; (2 3) = 132 = index 1
    CHECK(s3.conj(2, 3) == 1);
    for (uint32_t x = 0; x < 6; ++x) CHECK(s3.conj(x, s3.identity()) == x);
    auto z4 = FiniteGroup::cyclic(4);
    for (uint32_t x = 0; x < 4; ++x) {
        for (uint32_t y = 0; y < 4; ++y) CHECK(z4.conj(x, y) == x);
    }
    CHECK(error_code([&] { s3.conj(7, 0); }) == "IndexOutOfRange");
}

TEST_CASE("all three constructions are Hopf for small named groups") {
    const FieldSpec f3 = FieldSpec::prime_field(3);
    std::vector<FiniteGroup> groups;
    for (uint32_t n = 1; n <= 8; ++n) groups.push_back(FiniteGroup::cyclic(n));
    groups.push_back(FiniteGroup::symmetric(3));
    groups.push_back(FiniteGroup::dihedral(3));
    groups.push_back(FiniteGroup::dihedral(4));
    for (const auto& g : groups) {
        for (const FieldSpec& f : {Q, f3}) {
            CHECK(group_algebra(g, f).is_hopf());
            CHECK(function_algebra(g, f).is_hopf());
        }
    }
}

TEST_CASE("kG is cocommutative and k^G is commutative") {
    auto s3 = FiniteGroup::symmetric(3);
    auto kg = group_algebra(s3, Q);
    auto fg = function_algebra(s3, Q);
    LinearMap tau = LinearMap::swap(Q, 6);
    CHECK(compose(tau, kg.delta()) == kg.delta());
    CHECK(compose(fg.mu(), tau) == fg.mu());
    // and the group algebra of a non-abelian group is not commutative
    CHECK(compose(kg.mu(), tau) != kg.mu());
}

TEST_CASE("antipode of kZ3 over F5 swaps the non-identity elements") {
    auto h = group_algebra(FiniteGroup::cyclic(3), FieldSpec::prime_field(5));
    const Scalar one = Scalar::one(FieldSpec::prime_field(5));
    CHECK(h.antipode().matrix().col(0) == sv_unit(0, one));
    CHECK(h.antipode().matrix().col(1) == sv_unit(2, one));
    CHECK(h.antipode().matrix().col(2) == sv_unit(1, one));
}

TEST_CASE("function algebra comultiplication enumerates factorizations") {
    auto z2 = FiniteGroup::cyclic(2);
    auto h = function_algebra(z2, Q);
    // delta(d_e) = d_e (x) d_e + d_g (x) d_g
    const Scalar one = Scalar::one(Q);
    CHECK(h.delta().matrix().col(0) == SparseVec{{0, one}, {3, one}});
    // delta(d_g) = d_e (x) d_g + d_g (x) d_e
    CHECK(h.delta().matrix().col(1) == SparseVec{{1, one}, {2, one}});
    CHECK(h.basis_labels()[0] == "d_e");
}

TEST_CASE("superline requires an invertible 2") {
    CHECK(error_code([] { superline(FieldSpec::prime_field(2)); }) == "CharTwoUnsupported");
    CHECK(superline(FieldSpec::prime_field(7)).is_hopf());
}

TEST_CASE("superline relations") {
    auto h = superline(Q);
    enum { U, G, X, GX };
    const Scalar one = Scalar::one(Q);
    auto prod = [&](uint32_t a, uint32_t b) { return h.mu().matrix().col(a * 4 + b); };
    CHECK(prod(G, G) == sv_unit(U, one));   // g^2 = 1
    CHECK(prod(X, X).empty());              // x^2 = 0
    CHECK(prod(X, G) == sv_unit(GX, -one)); // xg = -gx
    CHECK(prod(G, X) == sv_unit(GX, one));
    // delta(gx) = gx (x) g + 1 (x) gx
    CHECK(h.delta().matrix().col(GX) == SparseVec{{U * 4 + GX, one}, {GX * 4 + G, one}});
    // S(x) = -gx, S(gx) = x
    CHECK(h.antipode().matrix().col(X) == sv_unit(GX, -one));
    CHECK(h.antipode().matrix().col(GX) == sv_unit(X, one));
}
