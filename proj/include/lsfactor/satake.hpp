#pragma once

#include "lsfactor/lscoeff.hpp"

namespace lsfactor {

enum class SatakeRep { Std, Tensor, Sym2, Ext2, Asai };

/// Diagonal Satake parameters: x (always), y (tensor and Asai), and the
/// Frobenius twist flag for Asai at inert places.
struct SatakeClass {
    std::vector<CycScalar> x;
    std::vector<CycScalar> y;
    bool frob_twist = false;
};

/// det(I - rho(class) Z)^{-1} for the given representation.
///   std:    prod_i (1 - x_i Z)^{-1}
///   tensor: prod_{i,j} (1 - x_i y_j Z)^{-1}
///   sym2:   prod_{i<=j} (1 - x_i x_j Z)^{-1}
///   ext2:   prod_{i<j} (1 - x_i x_j Z)^{-1}
///   asai:   without the twist this is tensor; with it, the inverse
///           determinant of the n^2 x n^2 matrix of (v (x) w) -> y w (x) x v,
///           computed literally.
RatFunc unramified_L(const SatakeClass& cls, SatakeRep rep);

/// Checks the unramified identity
///   C(s, d, psi) L1(s) L2(2s) = L1~(1-s) L2~(1-2s)
/// where the L's are built through unramified_L from the uniformizer values
/// of the datum (conjugate-side parameters and the eta twist entering the
/// Asai classes at inert unitary places) and ~ marks the inverted class.
/// Requires psi of level 0 and every block unramified; GL data lists the
/// n1 blocks of the first factor followed by the n2 blocks of the second.
bool unramified_identity_check(const GroupTag& G, const InducingDatum& d, const AddChar& psi);

}  // namespace lsfactor
