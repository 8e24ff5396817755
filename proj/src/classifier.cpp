#include "diffnev/classifier.hpp"

#include <cassert>

#include "diffnev/composition.hpp"
#include "diffnev/errors.hpp"

namespace diffnev {

NormalForm classify(const WRat& R) {
    assert(R.deg_w() >= 2);
    NormalForm form;
    form.d = R.deg_w();
    if (R.is_polynomial()) {
        form.tag = NormalForm::Tag::Polynomial;
        return form;
    }
    if (!compose_chain(R, 2).value.is_polynomial()) {
        form.tag = NormalForm::Tag::Generic;
        return form;
    }
    // A non-polynomial map with polynomial two-step composite must
    // be a * (w - b)^(-d) + shift(b, 1). Its denominator is then (w - b)^d,
    // the quotient on division is the constant shift(b, 1), and the
    // remainder is the constant a.
    const WPoly& den = R.den();
    const int d = den.degree();
    if (d != form.d)
        throw MalformedInversePower("degree of the unique pole is not deg_w(R)");
    RatFunc b = -den.coeff(d - 1) / RatFunc(static_cast<long>(d));
    WPoly lin(std::vector<RatFunc>{-b, RatFunc(1)});
    if (!(lin.pow(static_cast<unsigned>(d)) == den))
        throw MalformedInversePower("denominator is not a d-th power of (w - b)");
    auto [quot, rem] = divrem(R.num(), den);
    if (!quot.is_constant() || !rem.is_constant())
        throw MalformedInversePower("numerator is not c * (w - b)^d + a");
    RatFunc a = rem.coeff(0);
    if (a.is_zero()) throw MalformedInversePower("vanishing inverse-power coefficient a");
    if (!(quot.coeff(0) == b.shift(1)))
        throw MalformedInversePower("R(infinity) differs from shift(b, 1)");
    form.tag = NormalForm::Tag::InversePower;
    form.a = a;
    form.b = b;
    return form;
}

ExceptionalVerdict is_shift_exceptional(const WRat& R, const RatFunc& a) {
    assert(R.deg_w() >= 2);
    assert(a.is_constant() && "shift-exceptional targets must be constants");
    ExceptionalVerdict verdict;
    verdict.target = a;
    verdict.full_degree = R.deg_w() * R.deg_w();
    WRat G = compose_chain(R, 2).value;
    auto value = G.eval(a);
    verdict.fixed = value.has_value() && *value == a;
    if (verdict.fixed) {
        WPoly diff = G.num() - G.den().mul_scalar(a);
        verdict.local_multiplicity = diff.root_multiplicity(a);
    }
    verdict.is_exceptional =
        verdict.fixed && verdict.local_multiplicity == verdict.full_degree;
    return verdict;
}

WRat conjugate_target(const WRat& R, const RatFunc& a) {
    assert(R.deg_w() >= 1);
    // mu_z(w) = 1/w + a = (a*w + 1)/w; mu_{z+1}^{-1}(w) = 1/(w - a(z+1)).
    WRat mu(WPoly(std::vector<RatFunc>{RatFunc(1), a}), WPoly::variable());
    WRat mu_inv_next(WPoly(RatFunc(1)),
                     WPoly(std::vector<RatFunc>{-a.shift(1), RatFunc(1)}));
    WRat S = compose(mu_inv_next, compose(R, mu));
    assert(S.deg_w() == R.deg_w() && "conjugation must preserve the degree");
    return S;
}

}  // namespace diffnev
