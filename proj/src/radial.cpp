#include "wavetail/radial.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace wavetail {

SampledProfile::SampledProfile(std::vector<double> r,
                               std::vector<std::vector<double>> cols)
    : r_(std::move(r)) {
  if (cols.empty() || cols[0].size() != r_.size())
    throw std::invalid_argument("sampled profile needs a value column matching r");
  v_ = cols[0];
  for (std::size_t k = 1; k < cols.size(); ++k) extra_.push_back(cols[k]);
  order_ = 2 + static_cast<int>(extra_.size());

  // Natural cubic spline second derivatives.
  const std::size_t n = r_.size();
  m_.assign(n, 0.0);
  if (n >= 3) {
    std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
    b[0] = b[n - 1] = 1.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      double hl = r_[i] - r_[i - 1], hr = r_[i + 1] - r_[i];
      a[i] = hl / 6.0;
      b[i] = (hl + hr) / 3.0;
      c[i] = hr / 6.0;
      d[i] = (v_[i + 1] - v_[i]) / hr - (v_[i] - v_[i - 1]) / hl;
    }
    for (std::size_t i = 1; i < n; ++i) {
      double w = a[i] / b[i - 1];
      b[i] -= w * c[i - 1];
      d[i] -= w * d[i - 1];
    }
    m_[n - 1] = d[n - 1] / b[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) m_[i] = (d[i] - c[i] * m_[i + 1]) / b[i];
  }
}

Jet SampledProfile::jet_at(const Jet &x) const {
  double r = x.value();
  auto it = std::upper_bound(r_.begin(), r_.end(), r);
  std::size_t i = it == r_.begin() ? 0 : static_cast<std::size_t>(it - r_.begin()) - 1;
  if (i + 1 >= r_.size()) i = r_.size() - 2;
  double h = r_[i + 1] - r_[i];
  // Cubic piece in t = x - r_[i], as a jet so derivatives compose.
  Jet t = x - r_[i];
  Jet A = (Jet::constant(h) - t) / h;
  Jet B = t / h;
  Jet val = A * v_[i] + B * v_[i + 1] +
            ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * (h * h / 6.0);
  return val;
}

RadialProfile profile_from_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile csv: " + path);
  std::vector<double> r;
  std::vector<std::vector<double>> cols;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    std::vector<double> row;
    double x;
    while (ss >> x) row.push_back(x);
    if (row.size() < 2) continue;
    r.push_back(row[0]);
    cols.resize(std::max(cols.size(), row.size() - 1));
    for (std::size_t k = 1; k < row.size(); ++k) cols[k - 1].push_back(row[k]);
  }
  if (r.size() < 4) throw std::runtime_error("profile csv too short: " + path);
  auto sp = std::make_shared<SampledProfile>(std::move(r), std::move(cols));
  return RadialProfile([sp](const Jet &x) { return sp->jet_at(x); }, sp->order());
}

}  // namespace wavetail
