#include "phasest/serialize.hpp"

namespace phasest {

nlohmann::ordered_json state_to_json(const PhaseState& state) {
  nlohmann::ordered_json j;
  j["lo"] = state.index_set().lo();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : state.coeffs()) arr.push_back({c.real(), c.imag()});
  j["coeffs"] = std::move(arr);
  return j;
}

PhaseState state_from_json(const nlohmann::json& j) {
  try {
    const int lo = j.at("lo").get<int>();
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || arr.empty()) throw std::invalid_argument("state: coeffs must be a nonempty array");
    Eigen::VectorXcd c(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& pair = arr[i];
      if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("state: each coefficient is [re, im]");
      c[static_cast<Eigen::Index>(i)] = {pair[0].get<double>(), pair[1].get<double>()};
    }
    return {IndexSet(lo, lo + static_cast<int>(arr.size()) - 1), c};
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("state: ") + e.what());
  }
}

nlohmann::ordered_json error_to_json(const ErrorFunction& err) {
  nlohmann::ordered_json j;
  j["kind"] = err.name();
  if (const auto* iv = std::get_if<IntervalLoss>(&err.kind())) {
    j["T"] = iv->T;
    j["N"] = iv->N;
    j["coeffs"] = err.fourier_coeffs(16);
  } else if (const auto* cu = std::get_if<CustomLoss>(&err.kind())) {
    j["coeffs"] = cu->coeffs;
  }
  return j;
}

ErrorFunction error_from_json(const nlohmann::json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "sin") return ErrorFunction::sin_loss();
    if (kind == "interval") return ErrorFunction::interval(j.at("T").get<double>(), j.at("N").get<int>());
    if (kind == "custom") return ErrorFunction::custom(j.at("coeffs").get<std::vector<double>>());
    throw std::invalid_argument("error function: unknown kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("error function: ") + e.what());
  }
}

nlohmann::ordered_json run_to_json(const SampleRun& run, const std::string& samples_path) {
  nlohmann::ordered_json j;
  j["seed"] = run.seed;
  j["theta_true"] = run.theta_true;
  j["n"] = run.n_samples;
  j["samples_path"] = samples_path;
  return j;
}

}  // namespace phasest
