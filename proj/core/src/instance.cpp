#include "netband/instance.hpp"

#include <stdexcept>

namespace netband {

InterferenceInstance::InterferenceInstance(Eigen::MatrixXd effects)
    : effects_(std::move(effects)) {
  if (effects_.rows() != effects_.cols()) {
    throw std::invalid_argument("effect matrix must be square");
  }
  support_ = effects_.array() != 0.0;
  assumption_compliant_ =
      (effects_.array().abs().rowwise().sum() <= 1.0 + 1e-12).all();
}

ThetaVector theta_of(const InterferenceInstance& instance) {
  return instance.effects().colwise().sum().transpose();
}

ColumnProfile column_profile(const InterferenceInstance& instance) {
  const auto& support = instance.support();
  ColumnProfile rho(instance.d());
  for (int j = 0; j < instance.d(); ++j) {
    rho[j] = static_cast<int>(support.col(j).count());
  }
  return rho;
}

int row_sparsity(const InterferenceInstance& instance) {
  const auto& support = instance.support();
  int s = 0;
  for (int i = 0; i < instance.d(); ++i) {
    s = std::max(s, static_cast<int>(support.row(i).count()));
  }
  return s;
}

ActionVector oracle_action(const ThetaVector& theta) {
  ActionVector a(theta.size());
  for (Eigen::Index j = 0; j < theta.size(); ++j) a[j] = sign_plus(theta[j]);
  return a;
}

double instantaneous_regret(const InterferenceInstance& instance,
                            const ActionVector& a) {
  return RegretOracle(instance).regret(a);
}

}  // namespace netband
