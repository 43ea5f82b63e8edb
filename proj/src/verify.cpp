#include "umbral/verify.hpp"

#include <functional>
#include <sstream>

#include "umbral/families.hpp"
#include "umbral/random_umbra.hpp"
#include "umbral/sheffer_riordan.hpp"
#include "umbral/umbra.hpp"

namespace umbral
{

namespace
{

std::string show(const Rational &r)
{
    return r.str();
}
std::string show(const Poly &p)
{
    return to_string(p);
}
std::string show(const BiPoly &p)
{
    return to_string(p);
}
std::string show(const Umbra &u)
{
    return to_string(u);
}
std::string show(const Matrix &m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j <= i; ++j) {
            os << (j ? " " : "") << m(i, j);
        }
    }
    os << ']';
    return os.str();
}
std::string show(const std::vector<Poly> &ps)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        os << (i ? " | " : "") << to_string(ps[i]);
    }
    return os.str();
}

// Compares and records the first mismatch. `inputs` is evaluated lazily.
template <typename T>
bool expect(CheckResult &r, const T &lhs, const T &rhs, const std::function<std::string()> &inputs)
{
    if (lhs == rhs) {
        return true;
    }
    if (r.passed) {
        r.passed = false;
        r.counterexample = inputs() + "; lhs = " + show(lhs) + "; rhs = " + show(rhs);
    }
    return false;
}

CheckResult start(std::string name, std::string statement)
{
    CheckResult r;
    r.identity = std::move(name);
    r.statement = std::move(statement);
    return r;
}

// Independent stream per check so adding a check does not shift the others.
UmbraGenerator generator(std::uint64_t seed, std::uint64_t salt)
{
    return UmbraGenerator(seed * 0x9E3779B97F4A7C15ULL + salt);
}

Rational constant_term(const UmbralPolynomial &p, const Alphabet &a)
{
    return evaluate(p, a)[0];
}

Poly binomial_in_x(unsigned k)
{
    return drop_y(binomial(in_x(Poly::variable()), k));
}

// ---------------------------------------------------------------- abel

CheckResult check_abel_identity(std::size_t order, std::uint64_t seed)
{
    auto r = start("umbral Abel identity",
                   "(delta+gamma)^n ~ sum_k C(n,k) (delta+k.alpha)^{n-k} gamma(gamma-k.alpha)^{k-1}");
    auto gen = generator(seed, 1);
    for (int t = 0; t < 25; ++t) {
        const Umbra alpha = gen.umbra(order), gamma = gen.umbra(order), delta = gen.umbra(order);
        const Umbra neg_alpha = dot_scalar(-1, alpha);
        ++r.cases;
        for (unsigned n = 0; n <= order; ++n) {
            Alphabet a;
            const UmbralPolynomial d(a.fresh(delta)), g(a.fresh(gamma));
            const Rational lhs = constant_term((d + g).pow(n), a);
            Rational rhs;
            for (unsigned k = 0; k <= n; ++k) {
                const UmbralPolynomial k_alpha(a.fresh(dot_scalar(Rational(k), alpha)));
                rhs += binomial(Rational(n), k) * constant_term((d + k_alpha).pow(n - k), a) *
                       constant_term(abel_polynomial(a, k, g, neg_alpha), a);
            }
            if (!expect(r, lhs, rhs, [&] {
                    return "alpha=" + show(alpha) + " gamma=" + show(gamma) + " delta=" + show(delta) +
                           " n=" + std::to_string(n);
                })) {
                break;
            }
        }
    }
    return r;
}

CheckResult check_abel_derivative(std::size_t order, std::uint64_t seed)
{
    auto r = start("Abel derivative property", "D_gamma a_n(gamma,alpha) ~ n a_{n-1}(gamma+alpha',alpha)");
    auto gen = generator(seed, 2);
    const unsigned nmax = static_cast<unsigned>(std::min<std::size_t>(order, 8));
    for (int t = 0; t < 10; ++t) {
        const Umbra alpha = gen.umbra(order), gamma_u = gen.umbra(order);
        ++r.cases;
        for (unsigned n = 1; n <= nmax; ++n) {
            const auto inputs = [&] { return "alpha=" + show(alpha) + " n=" + std::to_string(n); };
            {
                // gamma bound to the formal variable x
                Alphabet a;
                const auto x = UmbralPolynomial::x();
                const Poly lhs = evaluate(abel_polynomial(a, n, x, alpha).formal_derivative(var_x), a);
                const UmbralPolynomial shifted = x + UmbralPolynomial(a.fresh(alpha));
                const Poly rhs = evaluate(abel_polynomial(a, n - 1, shifted, alpha), a) * Rational(n);
                expect(r, lhs, rhs, inputs);
            }
            {
                // gamma an umbra
                Alphabet a;
                const UmbralSymbol gs = a.fresh(gamma_u);
                const UmbralPolynomial g(gs);
                const Rational lhs = constant_term(abel_polynomial(a, n, g, alpha).formal_derivative(gs), a);
                const UmbralPolynomial shifted = g + UmbralPolynomial(a.fresh(alpha));
                const Rational rhs = constant_term(abel_polynomial(a, n - 1, shifted, alpha), a) * Rational(n);
                expect(r, lhs, rhs, [&] { return inputs() + " gamma=" + show(gamma_u); });
            }
        }
    }
    return r;
}

CheckResult check_generalized_abel(std::size_t order, std::uint64_t seed)
{
    auto r = start("generalized Abel identity",
                   "q(delta+gamma) ~ sum_k D^k q(delta+k.alpha)/k! gamma(gamma-k.alpha)^{k-1}");
    auto gen = generator(seed, 3);
    const std::size_t dmax = std::min<std::size_t>(order, 6);
    std::vector<Poly> qs;
    for (std::size_t j = 0; j <= dmax; ++j) {
        qs.push_back(Poly::monomial(Rational(1), j));
    }
    for (int t = 0; t < 10; ++t) {
        const Umbra alpha = gen.umbra(order), gamma = gen.umbra(order), delta = gen.umbra(order);
        const Umbra neg_alpha = dot_scalar(-1, alpha);
        std::vector<Poly> cases = qs;
        cases.push_back(gen.polynomial(dmax));
        ++r.cases;
        for (const Poly &q : cases) {
            Alphabet a;
            const UmbralPolynomial d(a.fresh(delta)), g(a.fresh(gamma));
            const Rational lhs = constant_term(substitute(q, d + g), a);
            Rational rhs;
            Poly dq = q;
            for (unsigned k = 0; k <= static_cast<unsigned>(std::max<long>(q.degree(), 0)); ++k) {
                const UmbralPolynomial k_alpha(a.fresh(dot_scalar(Rational(k), alpha)));
                rhs += constant_term(substitute(dq, d + k_alpha), a) / factorial(k) *
                       constant_term(abel_polynomial(a, k, g, neg_alpha), a);
                dq = dq.derivative();
            }
            expect(r, lhs, rhs, [&] {
                return "q=" + show(q) + " alpha=" + show(alpha) + " gamma=" + show(gamma) + " delta=" + show(delta);
            });
        }
    }
    return r;
}

CheckResult check_abel_binomial(std::size_t order, std::uint64_t seed)
{
    auto r = start("binomial identity of Abel polynomials",
                   "a_n(x+y,alpha) ~ sum_k C(n,k) a_k(x,alpha) a_{n-k}(y,alpha')");
    auto gen = generator(seed, 4);
    const unsigned nmax = static_cast<unsigned>(std::min<std::size_t>(order, 8));
    for (int t = 0; t < 10; ++t) {
        const Umbra alpha = gen.umbra(order);
        ++r.cases;
        for (unsigned n = 0; n <= nmax; ++n) {
            Alphabet a;
            const auto x = UmbralPolynomial::x(), y = UmbralPolynomial::y();
            const BiPoly lhs = evaluate_xy(abel_polynomial(a, n, x + y, alpha), a);
            BiPoly rhs;
            for (unsigned k = 0; k <= n; ++k) {
                const BiPoly left = evaluate_xy(abel_polynomial(a, k, x, alpha), a);
                const BiPoly right = evaluate_xy(abel_polynomial(a, n - k, y, alpha), a);
                rhs += scaled(left * right, binomial(Rational(n), k));
            }
            expect(r, lhs, rhs, [&] { return "alpha=" + show(alpha) + " n=" + std::to_string(n); });
        }
    }
    return r;
}

// ---------------------------------------------------------------- lif

CheckResult check_lagrange_inversion(std::size_t order, std::uint64_t seed)
{
    auto r = start("Lagrange inversion formula", "K_{gamma,alpha} = gamma.beta.(alpha_D)^<-1>");
    auto gen = generator(seed, 10);
    for (int t = 0; t < 25; ++t) {
        const Umbra gamma = gen.umbra(order), alpha = gen.umbra(order);
        ++r.cases;
        expect(r, k_umbra(gamma, alpha), via_series::k_umbra(gamma, alpha),
               [&] { return "gamma=" + show(gamma) + " alpha=" + show(alpha); });
    }
    return r;
}

CheckResult check_derivative_inverse(std::size_t order, std::uint64_t seed)
{
    auto r = start("derivative umbra from the K-umbra", "alpha_D = ((-1.K_alpha)_D)^<-1>");
    auto gen = generator(seed, 11);
    for (int t = 0; t < 25; ++t) {
        const Umbra alpha = gen.umbra(order);
        ++r.cases;
        const Umbra inner = derivative_umbra(dot_scalar(-1, k_umbra(alpha, alpha)));
        const auto inputs = [&] { return "alpha=" + show(alpha); };
        expect(r, derivative_umbra(alpha), inverse_umbra(inner), inputs);
        expect(r, derivative_umbra(alpha), via_series::inverse_umbra(inner), inputs);
    }
    return r;
}

CheckResult check_inverse_routes(std::size_t order, std::uint64_t seed)
{
    auto r = start("compositional inverse umbra", "f_{alpha^<-1>} - 1 = (f_alpha - 1)^<-1>, involutive");
    auto gen = generator(seed, 12);
    for (int t = 0; t < 25; ++t) {
        const Umbra u = gen.invertible_umbra(order);
        ++r.cases;
        const Umbra inv = inverse_umbra(u);
        const auto inputs = [&] { return "alpha=" + show(u); };
        expect(r, inv, via_series::inverse_umbra(u), inputs);
        expect(r, inverse_umbra(inv), u, inputs);
    }
    return r;
}

CheckResult check_composition_expansion(std::size_t order, std::uint64_t seed)
{
    auto r = start("composition umbra expansion",
                   "(gamma.beta.alpha_D)^n ~ sum_k C(n,k) gamma^k (k.alpha)^{n-k} = f_gamma(z f_alpha(z))");
    auto gen = generator(seed, 13);
    for (int t = 0; t < 25; ++t) {
        const Umbra gamma = gen.umbra(order), alpha = gen.umbra(order);
        ++r.cases;
        expect(r, composition_umbra(gamma, alpha), via_series::composition_umbra(gamma, alpha),
               [&] { return "gamma=" + show(gamma) + " alpha=" + show(alpha); });
    }
    return r;
}

CheckResult check_dot_routes(std::size_t order, std::uint64_t seed)
{
    auto r = start("dot-operation moment routes",
                   "f_{a+g} = f_a f_g, f_{a.u} = f_u^a, f_{g.u} = f_g(log f_u), f_{u_D} = 1 + z f_u");
    auto gen = generator(seed, 14);
    for (int t = 0; t < 25; ++t) {
        const Umbra g = gen.umbra(order), u = gen.umbra(order);
        const Rational a = gen.rational();
        ++r.cases;
        const auto inputs = [&] { return "g=" + show(g) + " u=" + show(u) + " a=" + show(a); };
        expect(r, add(g, u), via_series::add(g, u), inputs);
        expect(r, dot_scalar(a, u), via_series::dot_scalar(a, u), inputs);
        expect(r, dot(g, u), via_series::dot(g, u), inputs);
        expect(r, derivative_umbra(u), via_series::derivative_umbra(u), inputs);
    }
    return r;
}

// ---------------------------------------------------------------- duality

CheckResult check_duality(std::size_t order, std::uint64_t)
{
    auto r = start("duality", "chi.beta = beta.chi = 1");
    const Umbra chi = singleton(order), b = bell(order), one = scalar(1, order);
    r.cases = 1;
    expect(r, dot(chi, b), one, [] { return std::string("chi.beta"); });
    expect(r, dot(b, chi), one, [] { return std::string("beta.chi"); });
    return r;
}

CheckResult check_bell_moments(std::size_t order, std::uint64_t)
{
    auto r = start("Bell umbra moments", "E[beta^n] = 1, 1, 2, 5, 15, 52, ...; B_{n+1} = sum_k C(n,k) B_k");
    r.cases = 1;
    const Umbra b5 = bell(5);
    const Umbra expected(std::vector<Rational>{1, 1, 2, 5, 15, 52});
    expect(r, b5, expected, [] { return std::string("order 5"); });
    const Umbra b = bell(order);
    std::vector<Rational> rec{1};
    for (std::size_t n = 0; n < order; ++n) {
        Rational next;
        for (std::size_t k = 0; k <= n; ++k) {
            next += binomial(Rational(n), static_cast<unsigned>(k)) * rec[k];
        }
        rec.push_back(next);
    }
    expect(r, b, Umbra(rec), [&] { return "order " + std::to_string(order); });
    return r;
}

CheckResult check_cancellation(std::size_t order, std::uint64_t seed)
{
    auto r = start("dot-scalar cancellation and associativity", "k.alpha - k.alpha = eps; a.(b.alpha) = (ab).alpha");
    auto gen = generator(seed, 20);
    const Umbra eps = augmentation(order);
    for (int t = 0; t < 25; ++t) {
        const Umbra u = gen.umbra(order);
        const Rational k = gen.integer(-5, 5);
        const Rational a = gen.rational(), b = gen.rational();
        ++r.cases;
        const auto inputs = [&] { return "alpha=" + show(u) + " k=" + show(k) + " a=" + show(a) + " b=" + show(b); };
        expect(r, add(dot_scalar(k, u), dot_scalar(-k, u)), eps, inputs);
        expect(r, dot_scalar(a, dot_scalar(b, u)), dot_scalar(a * b, u), inputs);
    }
    return r;
}

CheckResult check_inverse_composition(std::size_t order, std::uint64_t seed)
{
    auto r = start("inverse umbra composes to the singleton", "alpha.beta.alpha^<-1> = alpha^<-1>.beta.alpha = chi");
    auto gen = generator(seed, 21);
    const Umbra chi = singleton(order), b = bell(order);
    for (int t = 0; t < 25; ++t) {
        const Umbra u = gen.invertible_umbra(order);
        const Umbra inv = inverse_umbra(u);
        ++r.cases;
        const auto inputs = [&] { return "alpha=" + show(u); };
        expect(r, dot(u, dot(b, inv)), chi, inputs);
        expect(r, dot(inv, dot(b, u)), chi, inputs);
    }
    return r;
}

// ---------------------------------------------------------------- sheffer

UmbraPair random_pair(UmbraGenerator &gen, std::size_t order)
{
    Umbra g = gen.umbra(order);
    Umbra a = gen.umbra(order);
    return {std::move(g), std::move(a)};
}

std::string show(const UmbraPair &p)
{
    return "(gamma=" + show(p.gamma()) + ", alpha=" + show(p.alpha()) + ")";
}

CheckResult check_sheffer_gf(std::size_t order, std::uint64_t seed)
{
    auto r = start("Sheffer sequence moments", "sum_k C(n,k)(gamma+k.alpha)^{n-k} x^k = n![z^n] A(z) e^{x z B(z)}");
    auto gen = generator(seed, 30);
    for (int t = 0; t < 10; ++t) {
        const UmbraPair p = random_pair(gen, order);
        ++r.cases;
        expect(r, sheffer_sequence(p).polys, sheffer_via_gf(p), [&] { return show(p); });
    }
    return r;
}

CheckResult check_sheffer_coefficients(std::size_t order, std::uint64_t seed)
{
    auto r = start("Sheffer coefficients vs Riordan extraction",
                   "C(n,k)(gamma+k.alpha)^{n-k} = n![z^n] A(z)(zB(z))^k/k!");
    auto gen = generator(seed, 31);
    for (int t = 0; t < 10; ++t) {
        const UmbraPair p = random_pair(gen, order);
        ++r.cases;
        expect(r, riordan_array(p).entries(), riordan_via_gf(p), [&] { return show(p); });
    }
    return r;
}

CheckResult check_abel_representation(std::size_t order, std::uint64_t seed)
{
    auto r = start("Abel representation of Sheffer sequences",
                   "s_n(x) ~ (x+K_{gamma,alpha})(x+K_{gamma,alpha}+n.K_alpha)^{n-1}");
    auto gen = generator(seed, 32);
    for (int t = 0; t < 10; ++t) {
        const UmbraPair p = random_pair(gen, order);
        ++r.cases;
        expect(r, abel_representation(p).polys, sheffer_sequence(p).polys, [&] { return show(p); });
    }
    return r;
}

CheckResult check_appell_binomial_corollaries(std::size_t order, std::uint64_t seed)
{
    auto r = start("Appell and binomial sequences", "(gamma,eps): s_n ~ (x+gamma)^n; (eps,alpha): s_n ~ x(x+n.K_alpha)^{n-1}");
    auto gen = generator(seed, 33);
    const Umbra eps = augmentation(order);
    for (int t = 0; t < 10; ++t) {
        const Umbra u = gen.umbra(order);
        ++r.cases;
        const auto appell = sheffer_sequence(UmbraPair(u, eps)).polys;
        const auto binom = sheffer_sequence(UmbraPair(eps, u)).polys;
        const Umbra k_alpha = k_umbra(u, u);
        for (unsigned n = 0; n <= order; ++n) {
            Alphabet a;
            const Poly lhs_appell = evaluate((UmbralPolynomial::x() + UmbralPolynomial(a.fresh(u))).pow(n), a);
            expect(r, appell[n], lhs_appell, [&] { return "gamma=" + show(u) + " n=" + std::to_string(n); });
            expect(r, binom[n], abel(n, k_alpha), [&] { return "alpha=" + show(u) + " n=" + std::to_string(n); });
        }
    }
    return r;
}

CheckResult check_sheffer_identity(std::size_t order, std::uint64_t seed)
{
    auto r = start("Sheffer identity", "s_n(x+y) = sum_k C(n,k) p_k(x) s_{n-k}(y), p the sequence of (eps,alpha)");
    auto gen = generator(seed, 34);
    const std::size_t nmax = std::min<std::size_t>(order, 8);
    for (int t = 0; t < 10; ++t) {
        const UmbraPair pr = random_pair(gen, order);
        const auto s = sheffer_sequence(pr).polys;
        const auto p = sheffer_sequence(UmbraPair(augmentation(order), pr.alpha())).polys;
        ++r.cases;
        for (std::size_t n = 0; n <= nmax; ++n) {
            BiPoly rhs;
            for (std::size_t k = 0; k <= n; ++k) {
                rhs += scaled(in_x(p[k]) * in_y(s[n - k]), binomial(Rational(n), static_cast<unsigned>(k)));
            }
            expect(r, at_x_plus_y(s[n]), rhs, [&] { return show(pr) + " n=" + std::to_string(n); });
        }
    }
    return r;
}

CheckResult check_binomial_identity(std::size_t order, std::uint64_t seed)
{
    auto r = start("binomial identity", "p_n(x+y) = sum_k C(n,k) p_k(x) p_{n-k}(y)");
    auto gen = generator(seed, 35);
    const std::size_t nmax = std::min<std::size_t>(order, 8);
    for (int t = 0; t < 10; ++t) {
        const Umbra alpha = gen.umbra(order);
        const auto p = sheffer_sequence(UmbraPair(augmentation(order), alpha)).polys;
        ++r.cases;
        for (std::size_t n = 0; n <= nmax; ++n) {
            BiPoly rhs;
            for (std::size_t k = 0; k <= n; ++k) {
                rhs += scaled(in_x(p[k]) * in_y(p[n - k]), binomial(Rational(n), static_cast<unsigned>(k)));
            }
            expect(r, at_x_plus_y(p[n]), rhs, [&] { return "alpha=" + show(alpha) + " n=" + std::to_string(n); });
        }
    }
    return r;
}

// ---------------------------------------------------------------- riordan

CheckResult check_homomorphism(std::size_t order, std::uint64_t seed)
{
    auto r = start("umbral composition is matrix product",
                   "(gamma,alpha)(eta,delta) = (gamma+eta.beta.alpha_D, alpha+delta.beta.alpha_D)");
    auto gen = generator(seed, 40);
    for (int t = 0; t < 10; ++t) {
        const UmbraPair p = random_pair(gen, order), q = random_pair(gen, order);
        ++r.cases;
        const auto product = riordan_multiply(riordan_array(p), riordan_array(q));
        expect(r, riordan_array(umbral_compose(p, q)).entries(), product.entries(),
               [&] { return "p=" + show(p) + " q=" + show(q); });
    }
    return r;
}

CheckResult check_group_laws(std::size_t order, std::uint64_t seed)
{
    auto r = start("Riordan group laws", "associativity, identity (eps,eps), inverse (-1.K_{gamma,alpha}, -1.K_alpha)");
    auto gen = generator(seed, 41);
    const Matrix id = Matrix::identity(order + 1);
    const UmbraPair e = UmbraPair::identity(order);
    for (int t = 0; t < 10; ++t) {
        const UmbraPair p = random_pair(gen, order), q = random_pair(gen, order), s = random_pair(gen, order);
        ++r.cases;
        const auto inputs = [&] { return "p=" + show(p) + " q=" + show(q) + " s=" + show(s); };
        const Matrix a = riordan_array(p).entries(), b = riordan_array(q).entries(), c = riordan_array(s).entries();
        expect(r, (a * b) * c, a * (b * c), inputs);
        expect(r, riordan_array(umbral_compose(umbral_compose(p, q), s)).entries(),
               riordan_array(umbral_compose(p, umbral_compose(q, s))).entries(), inputs);
        expect(r, riordan_array(e).entries(), id, inputs);
        expect(r, riordan_array(umbral_compose(p, e)).entries(), a, inputs);
        expect(r, riordan_array(umbral_compose(e, p)).entries(), a, inputs);
        const RiordanArray inv = riordan_inverse(riordan_array(p));
        expect(r, inv.entries() * a, id, inputs);
        expect(r, a * inv.entries(), id, inputs);
        expect(r, riordan_inverse(inv).entries(), a, inputs);
    }
    return r;
}

CheckResult check_pascal(std::size_t order, std::uint64_t)
{
    auto r = start("Pascal and signed Pascal arrays", "(scalar(1),eps) = [C(n,k)], inverse [(-1)^{n-k} C(n,k)], square [C(n,k) 2^{n-k}]");
    r.cases = 1;
    const std::size_t n1 = order + 1;
    Matrix pascal(n1), signed_pascal(n1), square(n1);
    for (std::size_t n = 0; n < n1; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            const Rational c = binomial(Rational(n), static_cast<unsigned>(k));
            pascal(n, k) = c;
            signed_pascal(n, k) = (n - k) % 2 == 0 ? c : -c;
            square(n, k) = c * pow(Rational(2), static_cast<long>(n - k));
        }
    }
    const RiordanArray p = riordan_array(UmbraPair(scalar(1, order), augmentation(order)));
    const auto none = [] { return std::string("pair (scalar(1), eps)"); };
    expect(r, p.entries(), pascal, none);
    expect(r, riordan_inverse(p).entries(), signed_pascal, none);
    expect(r, riordan_multiply(p, p).entries(), square, none);
    return r;
}

// [z^n] A(z) (z B(z))^k, the classical ordinary Riordan array.
Matrix ordinary_via_gf(const UmbraPair &pair)
{
    const std::size_t n = pair.order();
    const auto zb = gf(pair.alpha()).shift_up();
    auto column = gf(pair.gamma());
    Matrix m(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        for (std::size_t i = 0; i <= n; ++i) {
            m(i, k) = column[i];
        }
        column = column * zb;
    }
    return m;
}

CheckResult check_flavor_conversion(std::size_t order, std::uint64_t seed)
{
    auto r = start("ordinary Riordan arrays", "a_{n,k} = [z^n] f (z g)^k = s_{n,k} k!/n!; conversion is multiplicative");
    auto gen = generator(seed, 42);
    for (int t = 0; t < 10; ++t) {
        const UmbraPair p = random_pair(gen, order), q = random_pair(gen, order);
        ++r.cases;
        const auto inputs = [&] { return "p=" + show(p) + " q=" + show(q); };
        const RiordanArray a = riordan_array(p), b = riordan_array(q);
        expect(r, riordan_array(p, Flavor::ordinary).entries(), ordinary_via_gf(p), inputs);
        expect(r, flavor_convert(riordan_multiply(a, b)).entries(),
               riordan_multiply(flavor_convert(a), flavor_convert(b)).entries(), inputs);
        expect(r, flavor_convert(flavor_convert(a)).entries(), a.entries(), inputs);
    }
    return r;
}

CheckResult check_fundamental_theorem(std::size_t order, std::uint64_t seed)
{
    auto r = start("fundamental theorem of Riordan arrays", "[s_{n,k}] (m_k(eta)) = moments of gamma+eta.beta.alpha_D");
    auto gen = generator(seed, 43);
    for (int t = 0; t < 10; ++t) {
        const UmbraPair p = random_pair(gen, order);
        const Umbra eta = gen.umbra(order);
        ++r.cases;
        expect(r, ftra_apply(riordan_array(p), eta), ftra_umbral(p, eta),
               [&] { return show(p) + " eta=" + show(eta); });
    }
    return r;
}

// ---------------------------------------------------------------- families

std::vector<FamilyKind> sample_families(UmbraGenerator &gen)
{
    std::vector<FamilyKind> out{family::ChebyshevU{}, family::Gegenbauer{1}, family::Gegenbauer{Rational(1, 2)},
                                family::MittagLeffler{}, family::Pidduck{}, family::Meixner{1, 2}};
    for (int i = 0; i < 3; ++i) {
        out.emplace_back(family::Gegenbauer{gen.nonzero_rational()});
        Rational b = gen.rational();
        while (b.is_integer() && b.sign() <= 0) {
            b = gen.rational();
        }
        Rational c = gen.nonzero_rational();
        while (c.is_one()) {
            c = gen.nonzero_rational();
        }
        out.emplace_back(family::Meixner{b, c});
    }
    return out;
}

std::string describe(const FamilyKind &kind)
{
    std::string s = family_name(kind);
    if (const auto *g = std::get_if<family::Gegenbauer>(&kind)) {
        s += " lambda=" + g->lambda.str();
    } else if (const auto *m = std::get_if<family::Meixner>(&kind)) {
        s += " b=" + m->b.str() + " c=" + m->c.str();
    }
    return s;
}

CheckResult check_families_gf(std::size_t order, std::uint64_t seed)
{
    auto r = start("explicit formulas vs generating functions",
                   "P_n = n! sum_k C(n-k+t+kq-1,n-k) C(y,k) x^k specialized, vs each family's generating function");
    auto gen = generator(seed, 50);
    for (const auto &kind : sample_families(gen)) {
        ++r.cases;
        for (unsigned n = 0; n <= order; ++n) {
            if (!expect(r, family_polynomial(kind, n), gf_oracle(kind, n),
                        [&] { return describe(kind) + " n=" + std::to_string(n); })) {
                break;
            }
        }
    }
    return r;
}

CheckResult check_chebyshev(std::size_t order, std::uint64_t)
{
    auto r = start("Chebyshev recurrence and Gegenbauer reduction",
                   "U_n = 2x U_{n-1} - U_{n-2}; C_n^{(1)} = U_n; U_n = sum_k C(n+k+1,n-k) 2^k (x-1)^k");
    r.cases = 1;
    const Poly x = Poly::variable();
    const Poly two_x = x * Rational(2);
    const Poly x_minus_1 = x - Poly(Rational(1));
    std::vector<Poly> u;
    for (unsigned n = 0; n <= order; ++n) {
        u.push_back(chebyshev_u(n));
        const auto inputs = [n] { return "n=" + std::to_string(n); };
        if (n == 0) {
            expect(r, u[0], Poly(Rational(1)), inputs);
        } else if (n == 1) {
            expect(r, u[1], two_x, inputs);
        } else {
            expect(r, u[n], two_x * u[n - 1] - u[n - 2], inputs);
        }
        expect(r, gegenbauer(n, 1), u[n], inputs);
        Poly expansion;
        for (unsigned k = 0; k <= n; ++k) {
            const Poly term = Poly::monomial(Rational(1), 0) * (binomial(Rational(n + k + 1), n - k) * pow(Rational(2), k));
            Poly power(Rational(1));
            for (unsigned i = 0; i < k; ++i) {
                power = power * x_minus_1;
            }
            expansion += term * power;
        }
        expect(r, expansion, u[n], inputs);
    }
    if (order >= 2) {
        expect(r, chebyshev_u(2), Poly{Rational(-1), Rational(0), Rational(4)}, [] { return std::string("U_2"); });
    }
    return r;
}

CheckResult check_expansion_sums(std::size_t order, std::uint64_t seed)
{
    auto r = start("binomial-basis expansions",
                   "Gegenbauer sum in (x-1)^k; Meixner n! sum C(n+b-1,n-k) ((c-1)/c)^k C(x,k); Mittag-Leffler; Pidduck");
    auto gen = generator(seed, 51);
    const Poly x = Poly::variable();
    const Poly x_minus_1 = x - Poly(Rational(1));
    for (const auto &kind : sample_families(gen)) {
        ++r.cases;
        for (unsigned n = 0; n <= order; ++n) {
            Poly expansion;
            if (const auto *g = std::get_if<family::Gegenbauer>(&kind)) {
                Poly power(Rational(1));
                for (unsigned k = 0; k <= n; ++k) {
                    const Rational c = binomial(Rational(n + k - 1) + Rational(2) * g->lambda, n - k) *
                                       binomial(g->lambda + Rational(k) - 1, k) * pow(Rational(2), k);
                    expansion += power * c;
                    power = power * x_minus_1;
                }
            } else if (const auto *m = std::get_if<family::Meixner>(&kind)) {
                for (unsigned k = 0; k <= n; ++k) {
                    const Rational c = factorial(n) * binomial(Rational(n) + m->b - 1, n - k) * pow((m->c - 1) / m->c, k);
                    expansion += binomial_in_x(k) * c;
                }
            } else if (std::holds_alternative<family::MittagLeffler>(kind)) {
                if (n == 0) {
                    expansion = Poly(Rational(1));
                }
                for (unsigned k = 1; k <= n; ++k) {
                    expansion += binomial_in_x(k) * (factorial(n) * binomial(Rational(n - 1), n - k) * pow(Rational(2), k));
                }
            } else if (std::holds_alternative<family::Pidduck>(kind)) {
                for (unsigned k = 0; k <= n; ++k) {
                    expansion += binomial_in_x(k) * (factorial(n) * binomial(Rational(n), n - k) * pow(Rational(2), k));
                }
            } else {
                continue;
            }
            expect(r, expansion, family_polynomial(kind, n), [&] { return describe(kind) + " n=" + std::to_string(n); });
        }
    }
    // M_n(x) = m_n(x; 0, -1): b = 0 is outside the Meixner domain, so the
    // master polynomial is used directly.
    for (unsigned n = 0; n <= order; ++n) {
        expect(r, drop_y(master_polynomial(n, family_params(family::Meixner{0, -1}))), mittag_leffler(n),
               [n] { return "M_n = m_n(x;0,-1), n=" + std::to_string(n); });
    }
    // Pidduck = Mittag-Leffler / (1-z): P_n/n! = sum_{j<=n} M_j/j!.
    Poly partial;
    for (unsigned n = 0; n <= order; ++n) {
        partial += mittag_leffler(n) * (Rational(1) / factorial(n));
        expect(r, pidduck(n) * (Rational(1) / factorial(n)), partial, [n] { return "Pidduck partial sums, n=" + std::to_string(n); });
    }
    return r;
}

CheckResult check_master_gf(std::size_t order, std::uint64_t seed)
{
    auto r = start("master polynomial generating function",
                   "sum P_n z^n/n! = (1-z)^{-t} (1 + x z/(1-z)^q)^y; q = t = 0 gives C(y,n) x^n n!");
    auto gen = generator(seed, 52);
    const unsigned nmax = static_cast<unsigned>(std::min<std::size_t>(order, 8));
    for (int t = 0; t < 5; ++t) {
        const MasterParams p = MasterParams::free(gen.rational(), gen.rational());
        ++r.cases;
        for (unsigned n = 0; n <= nmax; ++n) {
            expect(r, master_polynomial(n, p), master_via_gf(n, p),
                   [&] { return "q=" + show(p.q) + " t=" + show(p.t) + " n=" + std::to_string(n); });
        }
    }
    const MasterParams degenerate = MasterParams::free(0, 0);
    for (unsigned n = 0; n <= order; ++n) {
        BiPoly expected = binomial(BiPoly::variable(), n) * in_x(Poly::monomial(factorial(n), n));
        expect(r, master_polynomial(n, degenerate), expected, [n] { return "q=t=0, n=" + std::to_string(n); });
    }
    return r;
}

// family(x) = s_n(a x) where s is the Sheffer sequence of (A, B/a),
// a = B(0), for gf A(z) exp(x z B(z)).
CheckResult check_families_sheffer(std::size_t order, std::uint64_t seed)
{
    auto r = start("Meixner and Pidduck as Sheffer sequences", "A(z) e^{x z B(z)} with z B(z) = log((1-z/c)/(1-z))");
    auto gen = generator(seed, 53);
    std::vector<FamilyKind> kinds{family::Pidduck{}, family::Meixner{1, 2}};
    for (const auto &k : sample_families(gen)) {
        if (std::holds_alternative<family::Meixner>(k)) {
            kinds.push_back(k);
        }
    }
    const auto one = TruncatedSeries::one(order + 1);
    const auto z = TruncatedSeries::z(order + 1);
    for (const auto &kind : kinds) {
        TruncatedSeries a_series(order + 1), zb(order + 1);
        if (const auto *m = std::get_if<family::Meixner>(&kind)) {
            a_series = (one - z).pow(-m->b);
            zb = ((one - z.scaled_by(Rational(1) / m->c)) / (one - z)).log();
        } else {
            a_series = (one - z).reciprocal();
            zb = ((one + z) / (one - z)).log();
        }
        const Rational lead = zb[1];
        const auto b_tilde = zb.shift_down().scaled_by(Rational(1) / lead).with_order(order);
        const UmbraPair pair(from_series(a_series.with_order(order)), from_series(b_tilde));
        const auto s = sheffer_sequence(pair).polys;
        const Poly ax = Poly::variable() * lead;
        ++r.cases;
        for (unsigned n = 0; n <= order; ++n) {
            expect(r, family_polynomial(kind, n), s[n].evaluate(ax), [&] { return describe(kind) + " n=" + std::to_string(n); });
        }
    }
    return r;
}

using CheckFn = CheckResult (*)(std::size_t, std::uint64_t);

std::vector<CheckFn> checks_of(Suite s)
{
    switch (s) {
    case Suite::abel:
        return {check_abel_identity, check_abel_derivative, check_generalized_abel, check_abel_binomial};
    case Suite::lif:
        return {check_lagrange_inversion, check_derivative_inverse, check_inverse_routes, check_composition_expansion,
                check_dot_routes};
    case Suite::duality:
        return {check_duality, check_bell_moments, check_cancellation, check_inverse_composition};
    case Suite::sheffer:
        return {check_sheffer_gf,         check_sheffer_coefficients, check_abel_representation,
                check_appell_binomial_corollaries, check_sheffer_identity,  check_binomial_identity};
    case Suite::riordan_group:
        return {check_homomorphism, check_group_laws, check_pascal, check_flavor_conversion, check_fundamental_theorem};
    case Suite::families:
        return {check_families_gf, check_chebyshev, check_expansion_sums, check_master_gf, check_families_sheffer};
    case Suite::all:
        break;
    }
    std::vector<CheckFn> all;
    for (Suite sub : {Suite::abel, Suite::lif, Suite::duality, Suite::sheffer, Suite::riordan_group, Suite::families}) {
        const auto part = checks_of(sub);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

} // namespace

UmbralPolynomial substitute(const Poly &q, const UmbralPolynomial &arg)
{
    UmbralPolynomial acc;
    const auto &c = q.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * arg + UmbralPolynomial(c[i]);
    }
    return acc;
}

std::optional<Suite> parse_suite(std::string_view name)
{
    for (Suite s : {Suite::abel, Suite::lif, Suite::duality, Suite::sheffer, Suite::riordan_group, Suite::families,
                    Suite::all}) {
        if (name == to_string(s)) {
            return s;
        }
    }
    return std::nullopt;
}

const char *to_string(Suite s)
{
    switch (s) {
    case Suite::abel:
        return "abel";
    case Suite::lif:
        return "lif";
    case Suite::duality:
        return "duality";
    case Suite::sheffer:
        return "sheffer";
    case Suite::riordan_group:
        return "riordan-group";
    case Suite::families:
        return "families";
    case Suite::all:
        return "all";
    }
    return "?";
}

std::vector<CheckResult> run_suite(Suite suite, std::size_t order, std::uint64_t seed)
{
    if (order > max_verify_order) {
        throw DomainError("verification order " + std::to_string(order) + " exceeds the ceiling " +
                          std::to_string(max_verify_order));
    }
    std::vector<CheckResult> out;
    for (CheckFn fn : checks_of(suite)) {
        out.push_back(fn(order, seed));
    }
    return out;
}

} // namespace umbral
