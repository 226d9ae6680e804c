#pragma once

#include <Eigen/Dense>

#include "dirac/clifford.hpp"
#include "oracle.hpp"

namespace testutil {

inline dirac::MatrixC4 to_eigen(const oracle::M4& m)
{
    dirac::MatrixC4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = m[i][j];
    return r;
}

inline dirac::Bispinor to_eigen(const oracle::V4& v) { return {v[0], v[1], v[2], v[3]}; }

inline dirac::RowBispinor to_eigen_row(const oracle::V4& v)
{
    dirac::RowBispinor r;
    r << v[0], v[1], v[2], v[3];
    return r;
}

}  // namespace testutil

#define EXPECT_MAT_NEAR(a, b, tol) EXPECT_LE(dirac::max_abs_diff((a), (b)), (tol))
