#include "linkage_kit/job.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "linkage_kit/oracle.hpp"
#include "linkage_kit/parabolic.hpp"

namespace linkage_kit::cli {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& message,
                      ErrorKind kind = ErrorKind::InvalidJob) {
  throw JobError(kind, field, message);
}

const std::map<std::string, Command, std::less<>>& command_names() {
  static const std::map<std::string, Command, std::less<>> names{
      {"factors", Command::factors},         {"candidates", Command::candidates},
      {"obstructions", Command::obstructions}, {"linkset", Command::linkset},
      {"dominance", Command::dominance},     {"orbit", Command::orbit},
  };
  return names;
}

Rational parse_field_rational(const json& value, const std::string& field) {
  if (value.is_number_integer()) return Rational(mpz_class(value.dump(), 10));
  if (!value.is_string()) bad(field, "coordinate must be a \"p/q\" string or an integer", ErrorKind::InvalidRational);
  try {
    return parse_rational(value.get<std::string>());
  } catch (const Error& e) {
    bad(field, e.what(), ErrorKind::InvalidRational);
  }
}

json weight_to_json(const WeightL& w) {
  json out = json::array();
  for (const auto& c : w.components) {
    json comp = json::array();
    for (const auto& x : c) comp.push_back(format_rational(x));
    out.push_back(std::move(comp));
  }
  return out;
}

json root_to_json(const EmbeddingContext& ctx, const GlobalRoot& r) {
  return json{{"sigma", r.sigma}, {"root", ctx.base().positive_roots()[r.root_index]}};
}

json chain_to_json(const EmbeddingContext& ctx, const LinkageChain& chain) {
  json steps = json::array();
  for (const auto& s : chain.steps) {
    json step = root_to_json(ctx, s.root);
    step["weight"] = weight_to_json(s.result.algebraic);
    steps.push_back(std::move(step));
  }
  return steps;
}

json key_to_json(const CentralKey& key) {
  return json{{"smooth_tag", key.smooth_tag},
              {"pi_tag", key.pi_tag},
              {"reduced", weight_to_json(WeightL{key.reduced})},
              {"string", key.to_string()}};
}

struct Context {
  std::shared_ptr<const RootSystem> rs;
  EmbeddingContext ctx;
  ParabolicSubset parabolic;
  LocAnChar chi;
};

Context make_context(const JobSpec& job) {
  std::shared_ptr<const RootSystem> rs;
  try {
    rs = std::make_shared<const RootSystem>(build_root_system(job.root_system));
  } catch (const Error& e) {
    bad("root_system", e.what(), e.kind());
  }
  if (job.embeddings == 0) bad("embeddings", "embeddings must be at least 1");
  EmbeddingContext ctx(rs, job.embeddings);

  std::set<std::size_t> indices;
  for (std::size_t k = 0; k < job.parabolic.size(); ++k) {
    const std::size_t i = job.parabolic[k];
    if (i == 0 || i > rs->rank())
      bad("parabolic[" + std::to_string(k) + "]", "simple root index " + std::to_string(i) +
                                                      " out of range 1.." + std::to_string(rs->rank()),
          ErrorKind::IndexOutOfRange);
    indices.insert(i - 1);
  }
  ParabolicSubset parabolic(*rs, std::move(indices));

  WeightL weight = job.weight.value_or(ctx.zero());
  if (weight.components.size() != job.embeddings)
    bad("character.weight", "expected " + std::to_string(job.embeddings) + " embedding components, got " +
                                std::to_string(weight.components.size()),
        ErrorKind::ContextMismatch);
  for (std::size_t s = 0; s < weight.components.size(); ++s) {
    if (weight.components[s].size() != rs->dim())
      bad("character.weight[" + std::to_string(s) + "]",
          "expected " + std::to_string(rs->dim()) + " coordinates, got " +
              std::to_string(weight.components[s].size()),
          ErrorKind::ContextMismatch);
  }
  return Context{rs, std::move(ctx), std::move(parabolic), LocAnChar{std::move(weight), job.smooth_tag}};
}

json members_to_json(const EmbeddingContext& ctx, const LinkageResult& result, bool witnesses) {
  json members = json::array();
  for (const auto& m : result.members) {
    json entry{{"weight", weight_to_json(m.character.algebraic)}, {"smooth_tag", m.character.smooth_tag}};
    if (witnesses) entry["witness"] = chain_to_json(ctx, m.witness);
    members.push_back(std::move(entry));
  }
  return members;
}

std::set<WeightL> oracle_linkset(const Context& c, Convention convention, std::size_t* depth) {
  const auto stabilized = linkage_by_chains_stabilized(c.ctx, c.chi, convention);
  *depth = stabilized.depth;
  std::set<WeightL> out;
  for (const auto& m : stabilized.members) out.insert(m.algebraic);
  return out;
}

// Closure of {lambda} under every dot reflection; an independent route to the
// dot orbit that never enumerates the Weyl group.
std::set<WeightL> reflection_closure(const EmbeddingContext& ctx, const WeightL& weight, std::size_t guard) {
  std::set<WeightL> seen{weight};
  std::vector<WeightL> frontier{weight};
  const auto roots = ctx.global_roots();
  while (!frontier.empty()) {
    std::vector<WeightL> next;
    for (const auto& w : frontier) {
      for (const auto& r : roots) {
        WeightL image = ctx.dot_reflect(w, r);
        if (seen.insert(image).second) next.push_back(std::move(image));
        if (seen.size() > guard)
          throw Error(ErrorKind::OrbitGuardExceeded, "reflection closure exceeds guard " + std::to_string(guard));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

std::string table_row(const std::vector<std::string>& cells, const std::vector<std::size_t>& widths) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) os << "  ";
    if (i + 1 == cells.size())
      os << cells[i];
    else
      os << std::left << std::setw(static_cast<int>(widths[i])) << cells[i];
  }
  return os.str();
}

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) widths[i] = std::max(widths[i], r[i].size());
  std::string out = table_row(header, widths) + "\n";
  for (const auto& r : rows) out += table_row(r, widths) + "\n";
  return out;
}

std::string witness_text(const json& steps) {
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += ' ';
    out += "s[" + std::to_string(s["sigma"].get<std::size_t>()) + ":";
    const auto& root = s["root"];
    for (std::size_t i = 0; i < root.size(); ++i) out += (i ? "," : "") + std::to_string(root[i].get<int>());
    out += "]";
  }
  return out.empty() ? "-" : out;
}

std::string render(const json& doc, const Context& c, OutputFormat format) {
  if (format == OutputFormat::json) return doc.dump(2) + "\n";

  const json& result = doc["result"];
  std::string out = "# " + doc["input"]["command"].get<std::string>() + "  root_system=" + c.rs->type_name() +
                    "  embeddings=" + std::to_string(c.ctx.num_embeddings()) +
                    "  convention=" + doc["input"]["convention"].get<std::string>() + "\n";
  std::vector<std::vector<std::string>> rows;
  auto weight_text = [](const json& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ';';
      s += '(';
      for (std::size_t j = 0; j < w[i].size(); ++j) s += (j ? "," : "") + w[i][j].get<std::string>();
      s += ')';
    }
    return s;
  };
  if (result.contains("members")) {
    for (std::size_t i = 0; i < result["members"].size(); ++i) {
      const auto& m = result["members"][i];
      rows.push_back({std::to_string(i), weight_text(m["weight"]), m["smooth_tag"].get<std::string>()});
      if (m.contains("witness")) rows.back().push_back(witness_text(m["witness"]));
    }
    std::vector<std::string> header{"#", "weight", "smooth_tag"};
    if (!rows.empty() && rows.front().size() > header.size()) header.push_back("witness");
    out += render_table(header, rows);
  } else if (result.contains("obstructions")) {
    for (std::size_t i = 0; i < result["obstructions"].size(); ++i) {
      const auto& m = result["obstructions"][i];
      rows.push_back({std::to_string(i), weight_text(m["weight"]), m["central_key"]["string"].get<std::string>()});
    }
    out += render_table({"#", "weight", "central_key"}, rows);
  } else if (result.contains("roots")) {
    for (const auto& r : result["roots"]) {
      std::string root;
      for (const auto& x : r["root"]) root += (root.empty() ? "" : ",") + std::to_string(x.get<int>());
      rows.push_back({std::to_string(r["sigma"].get<std::size_t>()), root, r["pairing"].get<std::string>(),
                      r["integral"].get<bool>() ? "yes" : "no", r["dominant"].get<bool>() ? "yes" : "no"});
    }
    out += render_table({"sigma", "root", "pairing", "integral", "dominant"}, rows);
    out += std::string("in_lambda_p_plus: ") + (result["in_lambda_p_plus"].get<bool>() ? "yes" : "no") + "\n";
  }
  if (doc.contains("oracle"))
    out += std::string("oracle: ") + (doc["oracle"]["agree"].get<bool>() ? "agree" : "DISAGREE") + "\n";
  return out;
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [name, value] : command_names())
    if (value == c) return name;
  return "unknown";
}

Command parse_command(std::string_view text) {
  const auto& names = command_names();
  if (const auto it = names.find(text); it != names.end()) return it->second;
  bad("command", "unknown command \"" + std::string(text) + "\"");
}

WeightL parse_weight_text(std::string_view text) {
  WeightL w;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] != ';') continue;
    const std::string_view group = text.substr(start, i - start);
    RationalVector component;
    std::size_t cstart = 0;
    for (std::size_t j = 0; j <= group.size(); ++j) {
      if (j < group.size() && group[j] != ',') continue;
      const std::string field =
          "character.weight[" + std::to_string(w.components.size()) + "][" + std::to_string(component.size()) + "]";
      try {
        component.push_back(parse_rational(group.substr(cstart, j - cstart)));
      } catch (const Error& e) {
        bad(field, e.what(), ErrorKind::InvalidRational);
      }
      cstart = j + 1;
    }
    w.components.push_back(std::move(component));
    start = i + 1;
  }
  return w;
}

JobSpec parse_job(const json& doc) {
  if (!doc.is_object()) bad("", "job document must be a JSON object");
  static const std::set<std::string> known{"schema",  "root_system", "embeddings", "parabolic", "character",
                                           "pi_tag",  "convention",  "command",    "oracle",    "witnesses"};
  for (const auto& [key, value] : doc.items())
    if (!known.contains(key)) bad(key, "unknown field");

  JobSpec job;
  if (doc.contains("schema")) {
    if (!doc["schema"].is_string() || doc["schema"].get<std::string>() != kSchema)
      bad("schema", "expected \"" + std::string(kSchema) + "\"");
  }
  if (doc.contains("root_system")) {
    const json& rs = doc["root_system"];
    if (rs.is_string()) {
      try {
        job.root_system = CartanSpec::named(canonical_type_name(rs.get<std::string>()));
      } catch (const Error& e) {
        bad("root_system", e.what(), e.kind());
      }
    } else if (rs.is_array()) {
      IntMatrix m;
      for (std::size_t i = 0; i < rs.size(); ++i) {
        if (!rs[i].is_array()) bad("root_system[" + std::to_string(i) + "]", "matrix row must be an array");
        IntVector row;
        for (std::size_t j = 0; j < rs[i].size(); ++j) {
          if (!rs[i][j].is_number_integer())
            bad("root_system[" + std::to_string(i) + "][" + std::to_string(j) + "]", "entry must be an integer");
          row.push_back(rs[i][j].get<int>());
        }
        m.push_back(std::move(row));
      }
      job.root_system = CartanSpec::matrix(std::move(m));
    } else {
      bad("root_system", "expected a type name or an integer matrix");
    }
  }
  if (doc.contains("embeddings")) {
    const json& e = doc["embeddings"];
    if (!e.is_number_integer() || e.get<long long>() < 1) bad("embeddings", "must be an integer >= 1");
    job.embeddings = e.get<std::size_t>();
  }
  if (doc.contains("parabolic")) {
    const json& p = doc["parabolic"];
    if (!p.is_array()) bad("parabolic", "must be an array of 1-based simple root indices");
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!p[k].is_number_integer() || p[k].get<long long>() < 1)
        bad("parabolic[" + std::to_string(k) + "]", "must be a positive integer");
      job.parabolic.push_back(p[k].get<std::size_t>());
    }
  }
  if (doc.contains("character")) {
    const json& c = doc["character"];
    if (!c.is_object()) bad("character", "must be an object with \"weight\" and \"smooth_tag\"");
    for (const auto& [key, value] : c.items())
      if (key != "weight" && key != "smooth_tag") bad("character." + key, "unknown field");
    if (c.contains("weight")) {
      const json& w = c["weight"];
      if (!w.is_array()) bad("character.weight", "must be a list of coordinate lists, one per embedding");
      WeightL weight;
      for (std::size_t s = 0; s < w.size(); ++s) {
        if (!w[s].is_array()) bad("character.weight[" + std::to_string(s) + "]", "must be a list of coordinates");
        RationalVector comp;
        for (std::size_t i = 0; i < w[s].size(); ++i)
          comp.push_back(parse_field_rational(
              w[s][i], "character.weight[" + std::to_string(s) + "][" + std::to_string(i) + "]"));
        weight.components.push_back(std::move(comp));
      }
      job.weight = std::move(weight);
    }
    if (c.contains("smooth_tag")) {
      if (!c["smooth_tag"].is_string()) bad("character.smooth_tag", "must be a string");
      job.smooth_tag = c["smooth_tag"].get<std::string>();
    }
  }
  if (doc.contains("pi_tag")) {
    if (!doc["pi_tag"].is_string()) bad("pi_tag", "must be a string");
    job.pi_tag = doc["pi_tag"].get<std::string>();
  }
  if (doc.contains("convention")) {
    if (!doc["convention"].is_string()) bad("convention", "must be \"paper\" or \"shifted\"");
    try {
      job.convention = parse_convention(doc["convention"].get<std::string>());
    } catch (const Error& e) {
      bad("convention", e.what());
    }
  }
  if (doc.contains("command")) {
    if (!doc["command"].is_string()) bad("command", "must be a string");
    job.command = parse_command(doc["command"].get<std::string>());
  }
  for (const char* flag : {"oracle", "witnesses"}) {
    if (!doc.contains(flag)) continue;
    if (!doc[flag].is_boolean()) bad(flag, "must be a boolean");
    (std::string(flag) == "oracle" ? job.oracle : job.witnesses) = doc[flag].get<bool>();
  }
  return job;
}

void normalize(JobSpec& job) {
  if (const auto* name = std::get_if<std::string>(&job.root_system.kind)) {
    try {
      job.root_system.kind = canonical_type_name(*name);
    } catch (const Error& e) {
      bad("root_system", e.what(), e.kind());
    }
  }
  std::sort(job.parabolic.begin(), job.parabolic.end());
  job.parabolic.erase(std::unique(job.parabolic.begin(), job.parabolic.end()), job.parabolic.end());
  if (!job.weight) job.weight = make_context(job).ctx.zero();
}

json to_json(const JobSpec& job) {
  json doc;
  doc["schema"] = kSchema;
  if (const auto* name = std::get_if<std::string>(&job.root_system.kind))
    doc["root_system"] = *name;
  else
    doc["root_system"] = std::get<IntMatrix>(job.root_system.kind);
  doc["embeddings"] = job.embeddings;
  doc["parabolic"] = job.parabolic;
  doc["character"] = json{{"smooth_tag", job.smooth_tag}};
  if (job.weight) doc["character"]["weight"] = weight_to_json(*job.weight);
  doc["pi_tag"] = job.pi_tag;
  doc["convention"] = to_string(job.convention);
  doc["command"] = to_string(job.command);
  doc["oracle"] = job.oracle;
  doc["witnesses"] = job.witnesses;
  return doc;
}

std::size_t orbit_guard_from_env() {
  const char* raw = std::getenv("LINKAGE_ORBIT_GUARD");
  if (raw == nullptr || *raw == '\0') return kDefaultOrbitGuard;
  const std::string text(raw);
  if (!std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; }) ||
      text.size() > 18 || std::stoull(text) == 0)
    bad("LINKAGE_ORBIT_GUARD", "must be a positive integer, got \"" + text + "\"");
  return static_cast<std::size_t>(std::stoull(text));
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::GroupTooLarge:
    case ErrorKind::OrbitGuardExceeded:
      return kExitGuard;
    default:
      return kExitValidation;
  }
}

std::string error_document(ErrorKind kind, const std::string& field, const std::string& message, int exit_code) {
  json doc{{"schema", kSchema},
           {"error", {{"kind", std::string(linkage_kit::to_string(kind))}, {"field", field}, {"message", message}}},
           {"exit_code", exit_code}};
  return doc.dump() + "\n";
}

RunOutcome run(const JobSpec& input, const RunOptions& options) {
  try {
    JobSpec job = input;
    normalize(job);
    const Context c = make_context(job);
    const LinkageOptions lo{options.orbit_guard, job.witnesses};

    json doc;
    doc["schema"] = kSchema;
    doc["input"] = to_json(job);
    json result;
    std::optional<bool> agree;
    json oracle_info;

    auto check_oracle = [&](const std::set<WeightL>& production, auto&& filter) {
      if (!job.oracle) return;
      std::size_t depth = 0;
      std::set<WeightL> reference;
      for (const auto& w : oracle_linkset(c, job.convention, &depth))
        if (filter(w)) reference.insert(w);
      agree = reference == production;
      oracle_info = json{{"agree", *agree}, {"method", "chain-enumeration"}, {"depth", depth},
                         {"count", reference.size()}};
    };
    auto keep_all = [](const WeightL&) { return true; };

    switch (job.command) {
      case Command::linkset:
      case Command::factors: {
        const LinkageResult r = job.command == Command::linkset
                                    ? strongly_linked_set(c.ctx, c.chi, job.convention, lo)
                                    : verma_factors_borel(c.ctx, c.chi, job.convention, lo);
        result["members"] = members_to_json(c.ctx, r, job.witnesses);
        result["count"] = r.members.size();
        result["exact"] = true;
        result["upper_bound"] = false;
        check_oracle(r.algebraic_set(), keep_all);
        break;
      }
      case Command::candidates: {
        LinkageResult r;
        try {
          r = verma_factor_candidates(c.ctx, c.chi, c.parabolic, job.convention, lo);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotParabolicDominant) throw;
          bad("character.weight", e.what(), e.kind());
        }
        result["members"] = members_to_json(c.ctx, r, job.witnesses);
        result["count"] = r.members.size();
        result["exact"] = !r.upper_bound;
        result["upper_bound"] = r.upper_bound;
        check_oracle(r.algebraic_set(),
                     [&](const WeightL& w) { return in_lambda_p_plus(c.ctx, w, c.parabolic); });
        break;
      }
      case Command::obstructions: {
        std::vector<Obstruction> obs;
        try {
          obs = noncritical_obstruction_set(c.ctx, c.chi, c.parabolic, job.pi_tag, job.convention, lo);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NotParabolicDominant) throw;
          bad("character.weight", e.what(), e.kind());
        }
        json list = json::array();
        std::set<WeightL> production;
        for (const auto& o : obs) {
          json entry{{"weight", weight_to_json(o.character.algebraic)},
                     {"smooth_tag", o.character.smooth_tag},
                     {"central_key", key_to_json(o.key)}};
          if (job.witnesses) entry["witness"] = chain_to_json(c.ctx, o.witness);
          list.push_back(std::move(entry));
          production.insert(o.character.algebraic);
        }
        result["obstructions"] = std::move(list);
        result["count"] = obs.size();
        result["noncritical_unconditionally"] = obs.empty();
        result["upper_bound"] = !c.parabolic.is_borel();
        check_oracle(production, [&](const WeightL& w) {
          return w != c.chi.algebraic && in_lambda_p_plus(c.ctx, w, c.parabolic);
        });
        break;
      }
      case Command::dominance: {
        json roots = json::array();
        for (const auto& r : c.ctx.global_roots()) {
          roots.push_back(json{{"sigma", r.sigma},
                               {"root", c.rs->positive_roots()[r.root_index]},
                               {"pairing", format_rational(c.ctx.global_pairing(c.chi.algebraic, r))},
                               {"integral", c.ctx.is_alpha_integral(c.chi, r)},
                               {"dominant", c.ctx.is_alpha_dominant(c.chi, r, job.convention)}});
        }
        result["roots"] = std::move(roots);
        result["in_lambda_p_plus"] = in_lambda_p_plus(c.ctx, c.chi.algebraic, c.parabolic);
        break;
      }
      case Command::orbit: {
        const auto orbit = dot_orbit(c.ctx, c.chi.algebraic, options.orbit_guard);
        json members = json::array();
        for (const auto& w : orbit) members.push_back(json{{"weight", weight_to_json(w)}, {"smooth_tag", c.chi.smooth_tag}});
        result["members"] = std::move(members);
        result["count"] = orbit.size();
        if (job.oracle) {
          const auto closure = reflection_closure(c.ctx, c.chi.algebraic, options.orbit_guard);
          agree = closure == orbit;
          oracle_info = json{{"agree", *agree}, {"method", "reflection-closure"}, {"count", closure.size()}};
        }
        break;
      }
    }
    doc["result"] = std::move(result);
    if (agree) doc["oracle"] = oracle_info;

    RunOutcome out;
    out.output = render(doc, c, options.format);
    if (agree && !*agree) {
      out.exit_code = kExitOracleDisagreement;
      out.error = json{{"schema", kSchema},
                       {"error", {{"kind", "OracleDisagreement"}, {"field", "oracle"},
                                  {"message", "production result and oracle differ"}}},
                       {"exit_code", kExitOracleDisagreement}}
                      .dump() +
                  "\n";
    }
    return out;
  } catch (const JobError& e) {
    return {exit_code_for(e.kind()), "", error_document(e.kind(), e.field(), e.what(), exit_code_for(e.kind()))};
  } catch (const Error& e) {
    return {exit_code_for(e.kind()), "", error_document(e.kind(), "", e.what(), exit_code_for(e.kind()))};
  }
}

RunOutcome run_document(const json& doc, const RunOptions& options) {
  try {
    return run(parse_job(doc), options);
  } catch (const JobError& e) {
    return {exit_code_for(e.kind()), "", error_document(e.kind(), e.field(), e.what(), exit_code_for(e.kind()))};
  } catch (const Error& e) {
    return {exit_code_for(e.kind()), "", error_document(e.kind(), "", e.what(), exit_code_for(e.kind()))};
  }
}

}  // namespace linkage_kit::cli
