#ifndef ARWHIT_LANGLANDS_HPP
#define ARWHIT_LANGLANDS_HPP

#include <string>
#include <variant>
#include <vector>

#include "arwhit/contour.hpp"

namespace arwhit {

// An irreducible generic representation of GL(2, R): either a principal
// series induced from characters chi_{(nu1,delta1)}, chi_{(nu2,delta2)}
// (delta1 >= delta2), or a discrete series D_{(nu,kappa)} with kappa >= 2.
struct RealGL2Rep {
    enum class Kind { ps, ds };
    Kind kind = Kind::ps;
    cplx nu1{};
    int delta1 = 0; // ps only
    cplx nu2{};
    int delta2 = 0;
    cplx nu{}; // ds only
    int kappa = 2;
};

RealGL2Rep gl2r_principal(cplx nu1, int delta1, cplx nu2, int delta2);
RealGL2Rep gl2r_discrete(cplx nu, int kappa);

// GL(3, R): a principal series from three characters (delta1 >= delta2 >=
// delta3), or a generalized principal series D_{(nu1,kappa1)} x
// chi_{(nu2,delta2)}.
struct RealGL3Rep {
    enum class Kind { ps, gps };
    Kind kind = Kind::ps;
    cplx nu[3]{};
    int delta[3]{}; // ps only
    cplx nu1{};     // gps only
    int kappa1 = 2;
    cplx nu2{};
    int delta2 = 0;
};

RealGL3Rep gl3r_principal(cplx nu1, int delta1, cplx nu2, int delta2,
                          cplx nu3, int delta3);
RealGL3Rep gl3r_generalized(cplx nu1, int kappa1, cplx nu2, int delta2);

// GL(n, C), n <= 3: a principal series from characters chi_{(nu_i, d_i)},
// stored with d1 >= ... >= d_n.
struct ComplexRep {
    int n = 1;
    std::vector<std::pair<cplx, int>> chars; // (nu_i, d_i)
};

ComplexRep glc_principal(std::vector<std::pair<cplx, int>> chars);

using RepParam = std::variant<RealGL2Rep, RealGL3Rep, ComplexRep>;

// One irreducible summand of a Weil-group parameter: a character (nu, k)
// with k = delta in {0,1} over R or k = d in Z over C, or (over R only) the
// two-dimensional induced parameter with kappa >= 1.
struct WeilSummand {
    enum class Type { character, twodim };
    Type type = Type::character;
    cplx nu{};
    int k = 0;
};

struct WeilParam {
    Field field = Field::R;
    std::vector<WeilSummand> summands;
};

// Total dimension (characters count 1, two-dimensional summands 2).
int weil_dim(const WeilParam& p);

// Parameter assignment: characters map to characters, discrete series
// D_{(nu,kappa)} to the two-dimensional summand with parameter kappa - 1.
WeilParam weil_param(const RealGL2Rep& rep);
WeilParam weil_param(const RealGL3Rep& rep);
WeilParam weil_param(const ComplexRep& rep);
WeilParam weil_param(const RepParam& rep);

// Tensor product, fully decomposed: over R the product of two 2-dimensional
// summands splits as kappa+kappa' plus |kappa-kappa'|, and a resulting
// parameter with kappa = 0 is re-expanded into the two characters (nu, 0)
// and (nu, 1). Result is canonically sorted.
WeilParam tensor(const WeilParam& p, const WeilParam& q);

// L-factor: product over summands of Gamma_R(s + nu + delta) for real
// characters, Gamma_C(s + nu + kappa/2) for two-dimensional summands, and
// Gamma_C(s + nu + |d|/2) for complex characters.
cplx l_factor(const WeilParam& p, cplx s);

// l_factor(tensor(weil_param(a), weil_param(b)), s).
cplx rankin_l(const RepParam& a, const RepParam& b, cplx s);

// JSON round-trip used by the CLI: {"field": "R"|"C", "summands": [...]}.
std::string to_json(const WeilParam& p);
WeilParam weil_param_from_json(const std::string& text);

} // namespace arwhit

#endif
