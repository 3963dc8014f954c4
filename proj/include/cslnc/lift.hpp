#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "cslnc/bit_matrix.hpp"
#include "cslnc/circulant.hpp"
#include "cslnc/network.hpp"
#include "cslnc/scalar_code.hpp"

namespace cslnc {

/// Local kernel K_{d,e}: a circulant, or an arbitrary L x L matrix for codes
/// built outside the circular-shift family.
using LocalKernel = std::variant<Circulant, BitMatrix>;

BitMatrix dense(const LocalKernel& k);

/// (L', L)-fractional code over GF(2). When every kernel is a Circulant this is a
/// circular-shift code of degree max_degree().
struct FractionalCode {
    Network net;
    std::size_t L = 0;
    std::size_t Lprime = 0;
    std::map<EdgePair, LocalKernel> kernels;
    /// Per source: omega_s L' x omega_s L.
    std::vector<BitMatrix> source_matrices;
    /// Per receiver: |In(t)| L x omega_t L'.
    std::vector<std::optional<BitMatrix>> decoders;
    /// Lifted codes only: the circulant blocks of D_t(C_L), |In(t)| x omega_t.
    std::vector<std::optional<std::vector<std::vector<Circulant>>>> block_decoders;
    /// Lifted codes only: the scalar solution this came from.
    std::optional<ScalarCode> origin;

    FractionalCode(Network n, std::size_t L_, std::size_t Lp);

    /// Throws DimensionError for a non-adjacent pair or a wrong size.
    void set_kernel(std::size_t d, std::size_t e, LocalKernel k);
    bool all_circulant() const;
    /// Largest circulant degree; throws DomainError if some kernel is not circulant.
    std::size_t max_degree() const;
    /// Block-diagonal G_S, omega L' x omega L.
    BitMatrix source_matrix() const;
};

using CircShiftCode = FractionalCode;

/// L x (L-1): all-ones top row above I_{L-1}.
BitMatrix itilde(std::size_t L);

/// Lift of a scalar solution. Kernels g(C_L), G_s = I (x) [0 | I_{L-1}], decoders
/// D_t(C_L) (I (x) itilde). Throws DomainError when the scalar code is not a solution.
FractionalCode lift_code(const ScalarCode& code);

/// F_e per edge, omega L x L, by forward recursion.
std::vector<BitMatrix> vector_global_kernels(const FractionalCode& code);
/// [F_e]_{e in In(t)}, omega L x |In(t)| L.
BitMatrix receiver_kernel(const FractionalCode& code, const std::vector<BitMatrix>& F, std::size_t r);
/// [U_e^{L'}]_{e in Out(S_t)}: omega L' x omega_t L'.
BitMatrix demand_target(const FractionalCode& code, std::size_t r);

/// G_S [F_e]_{In(t)} D_t equals the demand target for every receiver.
bool verify_fractional(const FractionalCode& code);
/// Per-receiver decodability; when decodable and synthesize_into is given, a
/// decoder from solve_right is stored there.
std::vector<bool> solvable_rank_check(const FractionalCode& code, FractionalCode* synthesize_into = nullptr);

}  // namespace cslnc
