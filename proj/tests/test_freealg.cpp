#include <gtest/gtest.h>

#include "support.hpp"

using namespace ncf;
using ncf::testing::random_ncpoly;

namespace {

const PrimeField F5(5);
const PrimeField F2(2);
const AlphabetPtr XY = make_alphabet({"x", "y"});

using NP = NCPoly<PrimeField>;

NP parse(std::string_view s, const PrimeField &F = F5, const AlphabetPtr &a = XY) { return parse_expression(s, F, a); }

NP nonzero_random(std::mt19937_64 &rng, const PrimeField &F, std::size_t deg, std::size_t terms)
{
    while (true) {
        auto p = random_ncpoly(rng, F, XY, deg, terms);
        if (!p.is_zero()) {
            return p;
        }
    }
}

} // namespace

TEST(NCPoly, ProductExamples)
{
    EXPECT_EQ(parse("(y*x - 1)*(y*x*y + y)"), parse("y*x*y*x*y - y"));
    EXPECT_EQ(nc_mul(parse("x - y"), parse("x + y")), parse("x*x + x*y - y*x - y*y"));
    const auto zero = nc_scale(parse("y*x*y*x*y - y"), CPoly<PrimeField>(F5));
    EXPECT_TRUE(zero.is_zero());
    EXPECT_TRUE(zero.terms().empty());
    EXPECT_NE(parse("x*y"), parse("y*x"));
    EXPECT_EQ(nc_add(parse("x"), parse("-x")), NP(F5, XY));
}

TEST(NCPoly, DegreeAndHomogeneousParts)
{
    const auto f = parse("y*x*y*x*y - y");
    EXPECT_EQ(f.degree(), 5u);
    EXPECT_EQ(f.homogeneous_part(5), parse("y*x*y*x*y"));
    EXPECT_TRUE(f.homogeneous_part(3).is_zero());
    EXPECT_FALSE(f.is_homogeneous());
    EXPECT_THROW(NP(F5, XY).degree(), PreconditionError);
    EXPECT_EQ(to_string(f), "y*x*y*x*y - y");
    EXPECT_EQ(to_string(parse("2*x - 3")), "2*x + 2");
}

TEST(NCPoly, ContextMismatch)
{
    EXPECT_THROW(parse("x") + parse("x", PrimeField(7)), ContextMismatch);
    EXPECT_THROW(parse("x") * parse("x", F5, make_alphabet({"x", "z"})), ContextMismatch);
    // Equal alphabets held through different pointers are the same context.
    EXPECT_NO_THROW(parse("x") + parse("x", F5, make_alphabet({"x", "y"})));
}

TEST(NCPoly, CommutativeImage)
{
    const auto img = commutative_image(parse("x*y + y*x"));
    EXPECT_EQ(img, CPoly<PrimeField>::monomial(F5, CMonomial{1, 1}, F5.from_int(2)));
    EXPECT_EQ(to_string(commutative_image(parse("y*x*y*x*y - y")), std::vector<std::string>{"x", "y"}),
              "x^2*y^3 - y");
    EXPECT_EQ(to_string(commutative_image(parse("x*x - y*y")), std::vector<std::string>{"x", "y"}), "x^2 - y^2");
}

TEST(NCPoly, Homogenize)
{
    const auto X = make_alphabet({"x"});
    const auto h = homogenize(parse("x^2 - 1", F5, X), "y");
    EXPECT_EQ(to_string(h), "-y*y + x*x");
    const auto xyz = make_alphabet({"x", "y", "z"});
    EXPECT_EQ(homogenize(parse("y*x - 1"), "z"), parse("y*x - z*z", F5, xyz));
    EXPECT_EQ(homogenize(parse("x*y + y*y"), "z"), parse("x*y + y*y", F5, xyz));
    EXPECT_THROW(homogenize(parse("x"), "x"), PreconditionError);
}

TEST(NCPoly, RingLawsOnRandomSamples)
{
    std::mt19937_64 rng(21);
    for (const PrimeField &F : {F2, F5}) {
        for (int t = 0; t < 100; ++t) {
            const auto a = random_ncpoly(rng, F, XY, 3, 3);
            const auto b = random_ncpoly(rng, F, XY, 3, 3);
            const auto c = random_ncpoly(rng, F, XY, 3, 3);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a + b) * c, a * c + b * c);
            EXPECT_EQ(a + b, b + a);
            const auto s = F.element(rng() % F.size());
            EXPECT_EQ((a * s) * b, a * (b * s));
        }
    }
}

TEST(NCPoly, NoZeroDivisors)
{
    std::mt19937_64 rng(22);
    for (int t = 0; t < 200; ++t) {
        const auto a = nonzero_random(rng, F5, 4, 5);
        const auto b = nonzero_random(rng, F5, 4, 5);
        const auto ab = a * b;
        ASSERT_FALSE(ab.is_zero());
        EXPECT_EQ(ab.degree(), a.degree() + b.degree());
    }
}

TEST(NCPoly, HomogeneousPartsSumToPolynomial)
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const auto a = nonzero_random(rng, F5, 4, 5);
        NP sum(F5, XY);
        for (std::size_t d = 0; d <= a.degree(); ++d) {
            const auto part = a.homogeneous_part(d);
            EXPECT_TRUE(part.is_homogeneous());
            sum += part;
        }
        EXPECT_EQ(sum, a);
    }
}

TEST(NCPoly, CommutativeImageIsHomomorphism)
{
    std::mt19937_64 rng(24);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_ncpoly(rng, F5, XY, 3, 4);
        const auto b = random_ncpoly(rng, F5, XY, 3, 4);
        EXPECT_EQ(commutative_image(a * b), c_mul(commutative_image(a), commutative_image(b)));
        EXPECT_EQ(commutative_image(a + b), c_add(commutative_image(a), commutative_image(b)));
    }
}

TEST(NCPoly, HomogenizeRoundTrip)
{
    std::mt19937_64 rng(25);
    for (int t = 0; t < 100; ++t) {
        const auto a = nonzero_random(rng, F5, 4, 5);
        const auto h = homogenize(a, "z");
        EXPECT_TRUE(h.is_homogeneous());
        EXPECT_EQ(h.degree(), a.degree());
        EXPECT_EQ(set_letter_to_one(h, 2, XY), a);
    }
}

TEST(NCPoly, SymbolicCoefficients)
{
    const auto a1 = CPoly<PrimeField>::variable(F5, 0);
    auto g = parse("y*x");
    g.add_term(Word{}, -a1);
    auto h = parse("y*x*y");
    h.add_term(Word{1}, a1);
    const std::vector<std::string> sym{"a1"};
    EXPECT_EQ(to_string(g, sym), "y*x - a1");
    EXPECT_EQ(to_string(h, sym), "y*x*y + a1*y");
    EXPECT_FALSE(g.has_constant_coefficients());
    EXPECT_EQ(g.symbol_span(), 1u);
    const std::vector<Fp> one{F5.one()};
    EXPECT_EQ(g.substitute(one) * h.substitute(one), parse("y*x*y*x*y - y"));
    EXPECT_THROW(commutative_image(g), PreconditionError);
}
