#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cslnc/bit_matrix.hpp"
#include "cslnc/lift.hpp"
#include "cslnc/rng.hpp"
#include "cslnc/scalar_code.hpp"

namespace cslnc {

struct Transcript {
    /// m'_e per source edge coordinate, each of length L'.
    std::vector<BitVector> source_units;
    /// m_e per edge, length L.
    std::vector<BitVector> data;
    /// XORs spent forming each edge; source edges are 0 (G_s is not charged).
    std::vector<std::uint64_t> encode_xors;
    /// Per receiver, filled by decode().
    std::vector<std::optional<std::vector<BitVector>>> recovered;
    std::vector<std::uint64_t> decode_xors;
    /// Set when the source units came from random_units().
    std::optional<std::uint64_t> seed;
};

/// omega units of L' uniform bits.
std::vector<BitVector> random_units(std::size_t omega, std::size_t Lprime, Rng& rng);

/// Edge-local encoding in topological order. Charging per non-source edge: for
/// each output bit, (ones in that column of the stacked in-kernels) - 1, floored
/// at 0. For circulant kernels this is L (sum of degrees - 1).
Transcript propagate(const FractionalCode& code, const std::vector<BitVector>& source_units);

/// [m_e]_{In(t)} D_t, stored in tr.recovered[r]. Uses the circulant blocks when
/// the code has them: L (sum of block degrees - 1) per output block plus L for
/// the itilde step; otherwise the dense column rule above. Throws DomainError
/// when receiver r has no decoder.
std::vector<BitVector> decode(const FractionalCode& code, Transcript& tr, std::size_t r);

struct OpReport {
    struct Row {
        std::string scope;
        std::uint64_t xor_count;
        double per_bit;
    };
    /// "edge <i>" rows (per-bit = count / L) then "receiver <name>" rows
    /// (per-bit = count / (omega_t L')).
    std::vector<Row> rows;
    std::uint64_t encode_total = 0;
    std::uint64_t decode_total = 0;
};

OpReport op_report(const FractionalCode& code, const Transcript& tr);
/// CSV with header scope,xor_count,per_bit.
std::string op_report_csv(const OpReport& rep);

/// F_e as omega concatenated L-bit circulant coefficient vectors (omega L bits).
/// Throws DomainError if a block is not circulant.
BitVector serialize_gek(const BitMatrix& Fe, std::size_t L);
BitMatrix deserialize_gek(const BitVector& bits, std::size_t L);
/// Every entry of F_e row-major: omega L^2 bits.
BitVector serialize_gek_dense(const BitMatrix& Fe);
BitMatrix deserialize_gek_dense(const BitVector& bits, std::size_t L);

/// Symbol-level transport of a scalar code with counted schoolbook
/// multiplication: m^2 ANDs, (m-1)^2 XORs, (m-1)(kappa-1) XORs to reduce
/// modulo f, m XORs per addition.
struct ScalarTranscript {
    std::vector<FieldElement> data;
    std::vector<std::uint64_t> encode_ops;
};
ScalarTranscript propagate_scalar(const ScalarCode& code, const std::vector<FieldElement>& sources);
/// [m_e]_{In(t)} D_t with the counted multiply. Every entry of D_t is multiplied,
/// zeros included, so a receiver with omega in-edges pays omega^2 products.
std::vector<FieldElement> decode_scalar(const ScalarCode& code, const ScalarTranscript& tr, std::size_t r,
                                        std::uint64_t& ops);
/// The counted multiply on its own; ops is incremented.
FieldElement counted_mul(const FieldCtx& ctx, const FieldElement& a, const FieldElement& b, std::uint64_t& ops);

}  // namespace cslnc
