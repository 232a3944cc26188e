#pragma once

// Numerical thresholds used across the library. Structure constants across the
// built-in catalog are O(1)-O(4) and every linear system is 7- or 21- or
// 49-dimensional, so double precision leaves several orders of magnitude of
// headroom on each of these.

namespace g2lab::tol {

inline constexpr double coeff = 1e-9;              // form coefficient comparisons
inline constexpr double jacobi = 1e-12;            // d^2 = 0 acceptance
inline constexpr double metric_symmetry = 1e-12;
inline constexpr double metric_inverse = 1e-10;    // ||G*Ginv - I||
inline constexpr double closed = 1e-10;            // ||d phi|| gate for torsion
inline constexpr double det_b = 1e-12;             // |det b| below this is degenerate
inline constexpr double torsion_solve = 1e-8;      // residual of the tau ^ phi = d*phi solve
inline constexpr double torsion_membership = 1e-8; // ||tau ^ phi + *tau||
inline constexpr double derivation = 1e-9;         // is_derivation acceptance
inline constexpr double svd_cutoff_rel = 1e-8;     // sigma < cutoff * sigma_max counts as zero
inline constexpr double unimodular = 1e-10;        // |tr ad| threshold
inline constexpr double erp = 1e-8;                // ERP residual sup-norm
inline constexpr double ricci_agreement = 1e-9;    // two-method cross-check (hard error)
inline constexpr double soliton_residual = 1e-8;   // relative (AS) residual acceptance
inline constexpr double steady_lambda = 1e-7;      // |lambda| below this is steady
inline constexpr double torsion_free = 1e-12;      // |tau|^2 below this is torsion-free

}  // namespace g2lab::tol
