#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lsfactor/finite_field.hpp"

namespace lsfactor {

/// Dense polynomial over a finite coefficient field: ascending element codes,
/// no trailing zeros; zero is the empty vector.
using FqPoly = std::vector<long>;

FqPoly fq_trim(FqPoly a);
long fq_deg(const FqPoly& a);  // -1 for zero
bool fq_is_monic(const FqPoly& a);
FqPoly fq_one();
FqPoly fq_x();
FqPoly fq_constant(long c);

long fq_eval(const FiniteFieldPtr& k, const FqPoly& a, long x);
FqPoly fq_add(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& b);
FqPoly fq_sub(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& b);
FqPoly fq_mul(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& b);
FqPoly fq_scale(const FiniteFieldPtr& k, long c, const FqPoly& a);
FqPoly fq_monic(const FiniteFieldPtr& k, const FqPoly& a);
FqPoly fq_derivative(const FiniteFieldPtr& k, const FqPoly& a);
FqPoly fq_pow(const FiniteFieldPtr& k, const FqPoly& a, long e);

/// Euclidean division; b nonzero.
std::pair<FqPoly, FqPoly> fq_divmod(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& b);
FqPoly fq_mod(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& m);
FqPoly fq_mulmod(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& b, const FqPoly& m);

/// Monic gcd; fq_gcd(0, 0) = 0.
FqPoly fq_gcd(const FiniteFieldPtr& k, FqPoly a, FqPoly b);
bool fq_coprime(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& b);

struct FqXgcd {
    FqPoly g, u, v;  // u a + v b = g, g the monic gcd
};
FqXgcd fq_xgcd(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& b);

/// x with x = r_i mod m_i for pairwise coprime moduli.
FqPoly fq_crt(const FiniteFieldPtr& k, const std::vector<FqPoly>& residues,
              const std::vector<FqPoly>& moduli);

bool fq_irreducible(const FiniteFieldPtr& k, const FqPoly& a);
/// Monic irreducible factors with multiplicities (content dropped), ordered
/// by degree then enumeration order.
std::vector<std::pair<FqPoly, long>> fq_factor(const FiniteFieldPtr& k, const FqPoly& a);
/// Multiplicity of the irreducible P in a.
long fq_mult(const FiniteFieldPtr& k, const FqPoly& a, const FqPoly& P);

std::vector<FqPoly> fq_monics(const FiniteFieldPtr& k, long d);
std::vector<FqPoly> fq_monic_irreducibles(const FiniteFieldPtr& k, long d);

/// Base-q encoding of the coefficient codes.
long fq_code(const FiniteFieldPtr& k, const FqPoly& a);
FqPoly fq_from_code(const FiniteFieldPtr& k, long code);

/// "t^3+2*t+1" with coefficients as element codes; "0" for zero.
std::string fq_to_string(const FqPoly& a);
FqPoly fq_parse(const FiniteFieldPtr& k, const std::string& s);

}  // namespace lsfactor
