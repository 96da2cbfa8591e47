#pragma once

#include <Eigen/Core>

namespace cpsc {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

}  // namespace cpsc
