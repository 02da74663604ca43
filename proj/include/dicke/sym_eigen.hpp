// sym_eigen.hpp — dense real-symmetric eigensolver (Householder reduction + implicit-shift QL)
#pragma once

#include <cstddef>
#include <vector>

namespace dicke::linalg {

struct EigenDecomposition {
    std::size_t dim = 0;
    std::vector<double> values;  // ascending
    std::vector<double> vectors; // row-major; column k is the eigenvector of values[k]
};

// Serial reference implementation. Takes the matrix by value (it is destroyed
// during the reduction). Only the lower triangle is read.
EigenDecomposition sym_eigen_serial(std::vector<double> a, std::size_t n);

// OpenMP variant with row-parallel inner loops. Identical contract and, up to
// compiler codegen, identical arithmetic per matrix element.
EigenDecomposition sym_eigen_parallel(std::vector<double> a, std::size_t n);

// Dispatch: parallel when the matrix is large enough, threads are available,
// and we are not already inside a parallel region.
EigenDecomposition sym_eigen(std::vector<double> a, std::size_t n);

} // namespace dicke::linalg
