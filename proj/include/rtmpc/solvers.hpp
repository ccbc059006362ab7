#pragma once

#include "rtmpc/types.hpp"

namespace rtmpc {

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded, kMaxIter };

const char* to_string(SolveStatus s);

struct LpResult {
    Vector x;
    double optimum = 0.0;
    SolveStatus status = SolveStatus::kInfeasible;
};

/// Maximize c'x subject to Cin x <= din (x free). Dense two-phase simplex
/// with Bland's rule; statuses cover empty and unbounded feasible regions.
LpResult solve_lp(const Vector& c, const Matrix& Cin, const Vector& din);

/// True iff {x : Cin x <= din} is nonempty (phase-1 feasibility query).
bool lp_feasible(const Matrix& Cin, const Vector& din, double tol = 1e-9);

/// Strictly convex quadratic program
///   min 1/2 z'Hz + g'z  s.t.  Ceq z = deq,  Cin z <= din.
struct QpProblem {
    Matrix H;
    Vector g;
    Matrix Ceq;  // may have 0 rows
    Vector deq;
    Matrix Cin;  // may have 0 rows
    Vector din;
};

struct QpSolution {
    Vector z;
    double objective = 0.0;
    SolveStatus status = SolveStatus::kInfeasible;
    int iterations = 0;
};

/// Dual active-set method (Goldfarb/Idnani). Deterministic for a fixed
/// problem; infeasibility is reported through the status, never an exception.
QpSolution solve_qp(const QpProblem& p, double tol = 1e-8, int max_iter = 20000);

struct DareResult {
    Matrix P;  // stabilizing solution
    Matrix K;  // u = K x, closed loop A + BK Schur stable
};

/// Discrete algebraic Riccati equation solved by structure-preserving
/// doubling. Requires (A,B) stabilizable, Q >= 0, R > 0; the fixed-point
/// residual of the returned P is below 1e-10.
DareResult solve_dare(const Matrix& A, const Matrix& B, const Matrix& Q, const Matrix& R);

/// Smallest eigenvalue of a symmetric matrix. Throws if M is asymmetric
/// beyond tol.
double eig_min_sym(const Matrix& M, double tol = 1e-9);

/// Spectral radius of a (generally nonsymmetric) square matrix.
double spectral_radius(const Matrix& M);

}  // namespace rtmpc
