#include "dioph/cli/config.hpp"

#include <charconv>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include "toml.hpp"

namespace dioph::cli {

namespace {

struct Where {
  const std::string& source;
  std::string at(const toml::source_region& r) const {
    return source + ":" + std::to_string(r.begin.line) + ": ";
  }
};

std::string number_text(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Reals may be written as strings ("sqrt(5)", "3/2") or plain TOML numbers.
std::string real_text(const toml::node& n, const Where& w, const std::string& key) {
  if (const auto* s = n.as_string()) return s->get();
  if (const auto* i = n.as_integer()) return std::to_string(i->get());
  if (const auto* f = n.as_floating_point()) return number_text(f->get());
  throw ConfigError(w.at(n.source()) + key + " must be a string or a number");
}

double number(const toml::node& n, const Where& w, const std::string& key) {
  if (const auto* i = n.as_integer()) return static_cast<double>(i->get());
  if (const auto* f = n.as_floating_point()) return f->get();
  throw ConfigError(w.at(n.source()) + key + " must be a number");
}

std::int64_t integer(const toml::node& n, const Where& w, const std::string& key, std::int64_t lo) {
  const auto* i = n.as_integer();
  if (!i) throw ConfigError(w.at(n.source()) + key + " must be an integer");
  if (i->get() < lo) throw ConfigError(w.at(n.source()) + key + " must be at least " + std::to_string(lo));
  return i->get();
}

std::string text(const toml::node& n, const Where& w, const std::string& key) {
  if (const auto* s = n.as_string()) return s->get();
  throw ConfigError(w.at(n.source()) + key + " must be a string");
}

const toml::array& array(const toml::node& n, const Where& w, const std::string& key) {
  if (const auto* a = n.as_array()) return *a;
  throw ConfigError(w.at(n.source()) + key + " must be an array");
}

std::array<std::string, 3> triple(const toml::node& n, const Where& w, const std::string& key) {
  const auto& a = array(n, w, key);
  if (a.size() != 3) throw ConfigError(w.at(n.source()) + key + " needs exactly 3 entries");
  return {real_text(a[0], w, key), real_text(a[1], w, key), real_text(a[2], w, key)};
}

void read_lambda(const toml::table& t, const Where& w, RunConfig& cfg) {
  for (const auto& [k, v] : t) {
    const std::string key(k.str());
    if (key == "values") {
      cfg.lambda = triple(v, w, "lambda.values");
    } else if (key == "ratios") {
      cfg.ratio = triple(v, w, "lambda.ratios");
    } else if (key == "irrational") {
      const auto* b = v.as_boolean();
      if (!b) throw ConfigError(w.at(v.source()) + "lambda.irrational must be a boolean");
      cfg.ratio_irrational = b->get();
    } else {
      throw ConfigError(w.at(k.source()) + "unknown key '" + key + "' in [lambda]");
    }
  }
}

void read_mu(const toml::table& t, const Where& w, RunConfig& cfg) {
  for (const auto& [k, v] : t) {
    const std::string key(k.str());
    if (key == "extra") {
      cfg.extra_mu.clear();
      for (const auto& e : array(v, w, "mu.extra")) cfg.extra_mu.push_back(real_text(e, w, "mu.extra"));
    } else if (key == "varpi") {
      cfg.varpi = real_text(v, w, "mu.varpi");
    } else {
      throw ConfigError(w.at(k.source()) + "unknown key '" + key + "' in [mu]");
    }
  }
}

void read_run(const toml::table& t, const Where& w, RunConfig& cfg) {
  for (const auto& [k, v] : t) {
    const std::string key(k.str());
    if (key == "eta") {
      cfg.eta = real_text(v, w, key);
    } else if (key == "eps") {
      cfg.eps = real_text(v, w, key);
    } else if (key == "X") {
      cfg.X = number(v, w, key);
    } else if (key == "s") {
      cfg.s = static_cast<std::size_t>(integer(v, w, key, 1));
    } else if (key == "L") {
      cfg.L = static_cast<int>(integer(v, w, key, 1));
    } else if (key == "range_eps") {
      cfg.range_eps = number(v, w, key);
    } else if (key == "precision") {
      cfg.precision = static_cast<unsigned>(integer(v, w, key, 1));
    } else if (key == "format") {
      try {
        cfg.format = parse_format(text(v, w, key));
      } catch (const ConfigError& e) {
        throw ConfigError(w.at(v.source()) + e.what());
      }
    } else if (key == "out") {
      cfg.out = text(v, w, key);
    } else if (key == "workers") {
      cfg.workers = static_cast<unsigned>(integer(v, w, key, 1));
    } else if (key == "n") {
      cfg.n_list.clear();
      for (const auto& e : array(v, w, key)) cfg.n_list.push_back(integer(e, w, key, INT64_MIN));
    } else if (key == "nu") {
      cfg.nu = number(v, w, key);
    } else if (key == "k") {
      cfg.k = static_cast<unsigned>(integer(v, w, key, 1));
    } else if (key == "h") {
      cfg.h.clear();
      if (v.is_array()) {
        for (const auto& e : *v.as_array()) cfg.h.push_back(number(e, w, key));
      } else {
        cfg.h.push_back(number(v, w, key));
      }
    } else if (key == "sample") {
      cfg.sample = static_cast<std::size_t>(integer(v, w, key, 0));
    } else {
      throw ConfigError(w.at(k.source()) + "unknown key '" + key + "' in [run]");
    }
  }
}

void read_document(const toml::table& doc, const Where& w, RunConfig& cfg) {
  for (const auto& [k, v] : doc) {
    const std::string key(k.str());
    const auto* t = v.as_table();
    if (!t) throw ConfigError(w.at(k.source()) + "unexpected top-level key '" + key + "'");
    if (key == "lambda") {
      read_lambda(*t, w, cfg);
    } else if (key == "mu") {
      read_mu(*t, w, cfg);
    } else if (key == "run") {
      read_run(*t, w, cfg);
    } else {
      throw ConfigError(w.at(k.source()) + "unknown section [" + key + "]");
    }
  }
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw ConfigError("format must be json, csv or text, not '" + s + "'");
}

std::string_view to_string(Format f) {
  switch (f) {
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
    case Format::text:
      return "text";
  }
  return "?";
}

RawSystem RunConfig::raw_system() const {
  if (!lambda) throw ConfigError("missing [lambda] values (config file or --lambda)");
  RawSystem raw;
  raw.lambda = *lambda;
  raw.ratio = ratio ? *ratio : std::array<std::string, 3>{"1", "1", "1"};
  raw.extra_mu = extra_mu;
  raw.varpi = varpi;
  raw.eta = eta;
  raw.eps = eps;
  raw.ratio_irrational = ratio_irrational;
  raw.digits = precision;
  return raw;
}

void load_toml_string(const std::string& text, const std::string& source_name, RunConfig& cfg) {
  const Where w{source_name};
  toml::table doc;
  try {
    doc = toml::parse(text, source_name);
  } catch (const toml::parse_error& e) {
    throw ConfigError(w.at(e.source()) + std::string(e.description()));
  }
  read_document(doc, w, cfg);
}

void load_toml_file(const std::string& path, RunConfig& cfg) {
  const Where w{path};
  toml::table doc;
  try {
    doc = toml::parse_file(path);
  } catch (const toml::parse_error& e) {
    if (e.source().begin.line == 0) throw ConfigError(path + ": " + std::string(e.description()));
    throw ConfigError(w.at(e.source()) + std::string(e.description()));
  }
  read_document(doc, w, cfg);
}

}  // namespace dioph::cli
