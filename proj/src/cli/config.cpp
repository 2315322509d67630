// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/cli/config.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "qwalk/coins.hpp"
#include "qwalk/honeycomb.hpp"
#include "qwalk/line1d.hpp"
#include "qwalk/square.hpp"

namespace qwalk::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> tokens_of(const std::string& value) {
  // numeric fields may be wrapped as (re,im); treat parentheses and commas
  // as separators
  std::string cleaned = value;
  for (char& c : cleaned) {
    if (c == '(' || c == ')' || c == ',') c = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& key, const std::string& token) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + token + "'");
  }
}

double parse_double(const std::string& key, const std::string& token) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + token + "'");
  }
}

class KeyValues {
 public:
  explicit KeyValues(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
      }
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty()) {
        throw ConfigError("line " + std::to_string(line_no) + ": empty key");
      }
      if (!kv_.emplace(key, value).second) {
        throw ConfigError(key + ": duplicate key");
      }
    }
  }

  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  std::string take(const std::string& key) {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw ConfigError(key + ": required key is missing");
    std::string value = it->second;
    kv_.erase(it);
    return value;
  }

  std::string take_or(const std::string& key, const std::string& fallback) {
    return has(key) ? take(key) : fallback;
  }

  void reject_leftovers() const {
    if (kv_.empty()) return;
    std::string names;
    for (const auto& [key, value] : kv_) names += (names.empty() ? "" : ", ") + key;
    throw ConfigError("unrecognized keys: " + names);
  }

 private:
  std::map<std::string, std::string> kv_;
};

int lattice_dim(Lattice lattice) {
  switch (lattice) {
    case Lattice::line: return 2;
    case Lattice::honeycomb: return 3;
    default: return 4;
  }
}

Matrix parse_inline_matrix(KeyValues& kv, const std::string& prefix) {
  const int dim = parse_int(prefix + ".dim", kv.take(prefix + ".dim"));
  if (dim < 2 || dim > 4) throw ConfigError(prefix + ".dim: must be 2, 3 or 4");
  Matrix m(dim);
  for (int r = 0; r < dim; ++r) {
    const std::string key = prefix + ".row." + std::to_string(r);
    const auto toks = tokens_of(kv.take(key));
    if (toks.size() != static_cast<std::size_t>(2 * dim)) {
      throw ConfigError(key + ": expected " + std::to_string(2 * dim) +
                        " numbers (re im per entry), got " + std::to_string(toks.size()));
    }
    for (int c = 0; c < dim; ++c) {
      m.at(r, c) = Complex(parse_double(key, toks[static_cast<std::size_t>(2 * c)]),
                           parse_double(key, toks[static_cast<std::size_t>(2 * c + 1)]));
    }
  }
  return m;
}

Matrix parse_matrix_section(KeyValues& kv, const std::string& prefix, int required_dim,
                            std::string* name_out) {
  const bool has_name = kv.has(prefix + ".name");
  const bool has_inline = kv.has(prefix + ".dim");
  if (has_name && has_inline) {
    throw ConfigError(prefix + ": give either " + prefix + ".name or an inline matrix, not both");
  }
  Matrix m(2);
  if (has_name) {
    const std::string name = kv.take(prefix + ".name");
    m = coins::catalog(name).matrix;
    if (name_out) *name_out = name;
  } else if (has_inline) {
    m = parse_inline_matrix(kv, prefix);
    if (name_out) *name_out = "inline";
  } else {
    throw ConfigError(prefix + ": a matrix is required (" + prefix + ".name or " + prefix +
                      ".dim with " + prefix + ".row.R)");
  }
  if (m.dim() != required_dim) {
    throw ConfigError(prefix + ": matrix dimension " + std::to_string(m.dim()) +
                      " does not match the lattice coordination number " +
                      std::to_string(required_dim));
  }
  const auto unitarity = check_unitary(m, 1e-12);
  if (!unitarity.ok) {
    throw ConfigError(prefix + ": matrix is not unitary (max deviation " +
                      std::to_string(unitarity.max_deviation) + ")");
  }
  return m;
}

BasisLabel parse_label(const std::string& key, LabelKind kind, const std::vector<std::string>& t) {
  const auto want = [&](std::size_t n) {
    // n label fields plus re, im
    if (t.size() != n + 2) {
      throw ConfigError(key + ": expected " + std::to_string(n + 2) + " numbers, got " +
                        std::to_string(t.size()));
    }
  };
  const auto num = [&](std::size_t i) { return parse_int(key, t[i]); };
  switch (kind) {
    case LabelKind::coined_1d: want(2); return Coined1D{num(0), num(1)};
    case LabelKind::scattering_1d: want(2); return Scattering1D{num(0), num(1)};
    case LabelKind::coined_square: want(3); return CoinedSquare{num(0), num(1), num(2)};
    case LabelKind::scattering_square:
      want(4);
      return ScatteringSquare{num(0), num(1), num(2), num(3)};
    case LabelKind::coined_honeycomb: want(3); return CoinedHoney{num(0), num(1), num(2)};
    case LabelKind::scattering_honeycomb:
      want(3);
      return ScatteringHoney{num(0), num(1), num(2)};
  }
  throw ConfigError(key + ": unsupported label kind");
}

}  // namespace

LabelKind expected_kind(Lattice lattice, Model model) {
  switch (lattice) {
    case Lattice::line:
      return model == Model::coined ? LabelKind::coined_1d : LabelKind::scattering_1d;
    case Lattice::square:
    case Lattice::square_diagonal:
      return model == Model::coined ? LabelKind::coined_square : LabelKind::scattering_square;
    case Lattice::honeycomb:
      return model == Model::coined ? LabelKind::coined_honeycomb
                                    : LabelKind::scattering_honeycomb;
  }
  throw ConfigError("unsupported lattice");
}

ExperimentConfig parse_config_text(const std::string& text) {
  KeyValues kv(text);
  ExperimentConfig config;
  config.source_text = text;

  const std::string lattice = kv.take("lattice");
  if (lattice == "line") config.lattice = Lattice::line;
  else if (lattice == "square") config.lattice = Lattice::square;
  else if (lattice == "square-diagonal") config.lattice = Lattice::square_diagonal;
  else if (lattice == "honeycomb") config.lattice = Lattice::honeycomb;
  else throw ConfigError("lattice: unknown value '" + lattice + "'");

  const std::string model = kv.take("model");
  if (model == "coined") config.model = Model::coined;
  else if (model == "scattering") config.model = Model::scattering;
  else throw ConfigError("model: unknown value '" + model + "'");

  if (config.lattice == Lattice::square_diagonal && config.model == Model::scattering) {
    throw ConfigError("model: the square-diagonal lattice defines only the coined walk");
  }

  config.steps = parse_int("steps", kv.take_or("steps", "20"));
  if (config.steps < 0) throw ConfigError("steps: must be nonnegative");

  const std::string output = kv.take_or("output", "both");
  if (output == "native-grid") config.output = OutputKind::native;
  else if (output == "cross-grid") config.output = OutputKind::cross;
  else if (output == "both") config.output = OutputKind::both;
  else throw ConfigError("output: unknown value '" + output + "'");
  if (config.lattice == Lattice::square_diagonal && config.output != OutputKind::native) {
    throw ConfigError(
        "output: only native-grid is available on the square-diagonal lattice "
        "(it has no scattering counterpart)");
  }

  const int dim = lattice_dim(config.lattice);
  config.matrix = parse_matrix_section(kv, "matrix", dim, &config.matrix_name);

  for (int n = 0; kv.has("override." + std::to_string(n) + ".site"); ++n) {
    const std::string prefix = "override." + std::to_string(n);
    const auto site_tokens = tokens_of(kv.take(prefix + ".site"));
    Site site{0, 0};
    if (config.lattice == Lattice::line) {
      if (site_tokens.size() != 1) throw ConfigError(prefix + ".site: expected one integer (j)");
      site.j = parse_int(prefix + ".site", site_tokens[0]);
    } else {
      if (site_tokens.size() != 2) throw ConfigError(prefix + ".site: expected two integers (j k)");
      site.j = parse_int(prefix + ".site", site_tokens[0]);
      site.k = parse_int(prefix + ".site", site_tokens[1]);
    }
    config.overrides.push_back({site, parse_matrix_section(kv, prefix, dim, nullptr)});
  }

  const bool has_preset = kv.has("initial.preset");
  const bool has_terms = kv.has("initial.0");
  if (has_preset == has_terms) {
    throw ConfigError("initial: give exactly one of initial.preset or initial.N terms");
  }
  if (has_preset) {
    config.initial_preset = kv.take("initial.preset");
    if (config.initial_preset == "square-paper") {
      if (config.lattice != Lattice::square && config.lattice != Lattice::square_diagonal) {
        throw ConfigError("initial.preset: square-paper requires a square lattice");
      }
    } else if (config.initial_preset == "honeycomb-paper") {
      if (config.lattice != Lattice::honeycomb) {
        throw ConfigError("initial.preset: honeycomb-paper requires the honeycomb lattice");
      }
    } else {
      throw ConfigError("initial.preset: unknown preset '" + config.initial_preset + "'");
    }
  } else {
    const LabelKind kind = expected_kind(config.lattice, config.model);
    for (int n = 0;; ++n) {
      const std::string key = "initial." + std::to_string(n);
      if (!kv.has(key)) break;
      const auto toks = tokens_of(kv.take(key));
      if (toks.size() < 2) throw ConfigError(key + ": too few numbers");
      BasisLabel label = parse_label(key, kind, toks);
      try {
        validate_label(label);
      } catch (const ParameterError& err) {
        throw ConfigError(key + ": " + err.what());
      }
      const Complex amp(parse_double(key, toks[toks.size() - 2]),
                        parse_double(key, toks[toks.size() - 1]));
      config.initial_terms.push_back({label, amp});
    }
  }

  kv.reject_leftovers();
  return config;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

WaveFunction initial_state(const ExperimentConfig& config) {
  WaveFunction psi;
  if (!config.initial_preset.empty()) {
    if (config.initial_preset == "square-paper") {
      psi = square::preset_initial_state(config.model);
    } else {
      psi = honeycomb::preset_initial_state(config.model);
    }
  } else {
    psi = WaveFunction::from_terms(config.initial_terms);
    if (psi.empty() || *psi.kind() != expected_kind(config.lattice, config.model)) {
      throw ConfigError("initial: terms do not match the configured lattice/model");
    }
  }
  const double n2 = norm_sq(psi);
  if (std::abs(n2 - 1.0) > 1e-9) {
    throw ConfigError("initial: state norm**2 is " + std::to_string(n2) +
                      "; it must equal 1 within 1e-9");
  }
  return psi;
}

namespace {

template <class FieldT, class KeyFn>
FieldT build_field(const ExperimentConfig& config, KeyFn key_fn) {
  FieldT field(lattice_dim(config.lattice), config.matrix);
  for (const auto& o : config.overrides) field.set(key_fn(o.site), o.matrix);
  return field;
}

}  // namespace

StepOperator build_step_for_model(const ExperimentConfig& config, Model model) {
  switch (config.lattice) {
    case Lattice::line: {
      auto field = build_field<line::Field>(config, [](Site s) { return s.j; });
      return model == Model::coined ? line::coined_step(field) : line::scattering_step(field);
    }
    case Lattice::square: {
      auto field = build_field<square::Field>(config, [](Site s) { return s; });
      return model == Model::coined ? square::coined_step(field) : square::scattering_step(field);
    }
    case Lattice::square_diagonal: {
      if (model == Model::scattering) {
        throw ConfigError("the square-diagonal lattice defines only the coined walk");
      }
      auto field = build_field<square::Field>(config, [](Site s) { return s; });
      return square::diagonal_step(field);
    }
    case Lattice::honeycomb: {
      auto field = build_field<honeycomb::Field>(config, [](Site s) { return s; });
      return model == Model::coined ? honeycomb::coined_step(field)
                                    : honeycomb::scattering_step(field);
    }
  }
  throw ConfigError("unsupported lattice");
}

StepOperator build_step(const ExperimentConfig& config) {
  return build_step_for_model(config, config.model);
}

std::string config_hash(const ExperimentConfig& config) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const unsigned char c : config.source_text) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace qwalk::cli
