#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "cslnc/field.hpp"
#include "cslnc/network.hpp"

namespace cslnc {

/// (d, e) with head(d) == tail(e).
using EdgePair = std::pair<std::size_t, std::size_t>;

/// Scalar code over GF(2^{L-1}). Kernels are weight-bounded polynomials read at
/// alpha (or at alpha^power where a function takes a power); absent pairs are zero.
struct ScalarCode {
    FieldCtx ctx;
    Network net;
    std::map<EdgePair, WeightBoundedPoly> kernels;

    ScalarCode(FieldCtx c, Network n) : ctx(std::move(c)), net(std::move(n)) {}
    /// Throws DimensionError if (d, e) is not an adjacent pair or the length is not L.
    void set_kernel(std::size_t d, std::size_t e, WeightBoundedPoly g);
    /// Largest kernel weight.
    std::size_t degree() const;
};

/// Column f_e per edge, each of length omega.
using GlobalKernels = std::vector<std::vector<FieldElement>>;

/// Forward recursion in topological order.
GlobalKernels global_kernels(const ScalarCode& code, std::size_t power = 1);
/// Closed form A_{S,N} (I - A_{N,N})^{-1} over the kernel matrix A;
/// independent of the recursion and used to cross-check it.
GlobalKernels global_kernels_closed_form(const ScalarCode& code, std::size_t power = 1);

/// [f_e]_{e in In(t)} as an omega x |In(t)| matrix.
FieldMatrix receiver_matrix(const ScalarCode& code, const GlobalKernels& f, std::size_t r);

/// All length-L vectors of weight <= delta, by weight and then by the
/// ascending tuple of set positions: 0, 1, x, ..., x^{L-1}, 1+x, 1+x^2, ...
std::vector<WeightBoundedPoly> candidate_set(const FieldCtx& ctx, std::size_t delta);

/// sum_{i <= delta} C(L, i), saturating.
std::size_t candidate_count(std::size_t L, std::size_t delta);
/// Smallest delta <= (L-1)/2 whose candidate count reaches receivers, if any.
std::optional<std::size_t> corollary1_delta(std::size_t L, std::size_t receivers);

/// Flow-path greedy construction over kernels drawn from candidate_set(delta).
/// Throws DomainError when net is not multicast or no candidate assignment keeps
/// some frontier invertible.
ScalarCode lif_construct(const Network& net, const FieldCtx& ctx, std::size_t delta);

/// D_t with [f_e]_{In(t)} D_t = [u_e]_{Out(S_t)}; free variables zero.
/// Throws DomainError when the receiver cannot decode.
FieldMatrix decoding_matrix(const ScalarCode& code, std::size_t r, std::size_t power = 1);

/// Every receiver can recover its demanded sources.
bool verify_scalar(const ScalarCode& code, std::size_t power = 1);

/// Entries of a field matrix in canonical weight-bounded form, row-major.
std::vector<std::vector<WeightBoundedPoly>> canonical_entries(const FieldCtx& ctx, const FieldMatrix& m);

}  // namespace cslnc
