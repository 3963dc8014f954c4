#include "cslnc/reference_codes.hpp"

namespace cslnc {

ScalarCode reference_combination4_code() {
    const Network net = gen_combination(4);
    ScalarCode code(FieldCtx(5), net);
    auto x = [](std::size_t j) { return WeightBoundedPoly::monomial(5, j); };
    // edges 0, 1 leave s; 2..5 are r -> u_1..u_4
    for (std::size_t j = 0; j < 4; ++j) code.set_kernel(0, 2 + j, x(0));
    code.set_kernel(1, 3, x(0));
    code.set_kernel(1, 4, x(1));
    code.set_kernel(1, 5, x(2));
    for (std::size_t e = 6; e < net.edge_count(); ++e) code.set_kernel(net.in_edges(net.edges()[e].tail)[0], e, x(0));
    return code;
}

FractionalCode reference_example1_code() {
    FractionalCode code(gen_example1(), 3, 2);
    const BitMatrix k = BitMatrix::from_strings({"010", "000", "011"});
    code.set_kernel(0, 2, k);
    code.set_kernel(1, 3, k);
    code.source_matrices.push_back(BitMatrix::from_strings({"100000", "000100", "001000", "000001"}));
    code.decoders[0] = BitMatrix::from_strings({"0000", "1000", "1010", "0000", "0100", "0101"});
    return code;
}

}  // namespace cslnc
