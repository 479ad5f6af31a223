// Command-line interface: parses finitely presented groups, reports their
// first homology, Alexander-type polynomials (plain and twisted), norm
// comparisons on 1-cohomology classes, specialization checks, and weighted
// cocycle norms on explicit 2-complexes.
//
// Exit codes: 0 success, 1 a verified inequality failed, 2 input error,
// 3 resource guard tripped.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "afnorm/cocycle_min.hpp"
#include "afnorm/errors.hpp"
#include "afnorm/norms.hpp"
#include "afnorm/parse.hpp"

#ifndef AFNORM_VERSION
#define AFNORM_VERSION "0.0.0"
#endif

namespace {

using namespace afnorm;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct InputFile {
  std::string path;
  std::string contents;
  std::string digest;  // fnv1a-64 over the raw bytes, 16 hex digits
};

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

InputFile read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  InputFile f;
  f.path = path;
  f.contents = buf.str();
  f.digest = fnv1a64(f.contents);
  return f;
}

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::vector<Integer> parse_integer_list(const std::string& text, const char* what) {
  std::vector<Integer> out;
  if (text.empty()) return out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (item.empty() || item.find_first_not_of("-0123456789") != std::string::npos ||
        (item.size() > 1 && item.find('-', 1) != std::string::npos))
      throw DomainError(std::string(what) + " must be a comma-separated list of integers");
    out.push_back(Integer(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Upper bound on the generator count, overridable via environment.
int generator_cap() {
  if (const char* env = std::getenv("AFNORM_MAX_GENERATORS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

void check_generator_cap(const Presentation& p) {
  int cap = generator_cap();
  if (p.generator_count() > cap)
    throw ResourceError("presentation has " + std::to_string(p.generator_count()) +
                        " generators; limit is " + std::to_string(cap) +
                        " (set AFNORM_MAX_GENERATORS to raise it)");
}

ordered_json report_header(const std::string& command, const InputFile& in) {
  ordered_json j;
  j["tool"] = "afnorm";
  j["version"] = AFNORM_VERSION;
  j["command"] = command;
  j["input"] = {{"file", std::filesystem::path(in.path).filename().string()},
                {"digest", in.digest}};
  return j;
}

ordered_json json_integers(const std::vector<Integer>& v) {
  ordered_json a = ordered_json::array();
  for (const Integer& x : v) a.push_back(x.str());
  return a;
}

ordered_json json_character(const Character& chi) {
  ordered_json a = ordered_json::array();
  for (const Integer& x : chi.exponents) a.push_back(static_cast<long long>(x));
  return a;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

Character character_from_exponents(const AbelianStructure& h, const std::vector<Integer>& exps) {
  if (exps.size() != h.invariant_factors.size())
    throw DomainError("character needs " + std::to_string(h.invariant_factors.size()) +
                      " exponents, one per invariant factor");
  for (size_t k = 0; k < exps.size(); ++k)
    if (exps[k] < 0 || exps[k] >= h.invariant_factors[k])
      throw DomainError("character exponent " + exps[k].str() + " out of range [0, " +
                        h.invariant_factors[k].str() + ")");
  return Character{exps};
}

std::vector<Integer> class_from_option(const AbelianStructure& h, const std::string& text) {
  std::vector<Integer> cls = parse_integer_list(text, "--class");
  if (static_cast<int>(cls.size()) != h.free_rank)
    throw DomainError("class needs " + std::to_string(h.free_rank) +
                      " coordinates (the free rank), got " + std::to_string(cls.size()));
  return cls;
}

std::string homology_summary(const AbelianStructure& h) {
  std::string s;
  for (const Integer& d : h.invariant_factors) {
    if (!s.empty()) s += " x ";
    s += "Z/" + d.str();
  }
  for (int i = 0; i < h.free_rank; ++i) {
    if (!s.empty()) s += " x ";
    s += "Z";
  }
  return s.empty() ? "trivial" : s;
}

// --- subcommand payloads ---

int cmd_parse(const InputFile& in, bool as_json) {
  Presentation p = parse_presentation(in.contents);
  if (as_json) {
    ordered_json j = report_header("parse", in);
    ordered_json gens = ordered_json::array();
    for (const auto& g : p.generators) gens.push_back(g.name);
    ordered_json rels = ordered_json::array();
    for (const auto& r : p.relators) rels.push_back(word_to_string(r, p.generators));
    ordered_json occ = ordered_json::object();
    for (int i = 0; i < p.generator_count(); ++i)
      occ[p.generators[i].name] = generator_occurrences(p, i);
    j["presentation"] = {{"text", presentation_to_string(p)},
                         {"generators", gens},
                         {"relators", rels},
                         {"occurrences", occ}};
    emit(j);
  } else {
    std::cout << presentation_to_string(p) << "\n"
              << "generators: " << p.generator_count() << ", relators: " << p.relator_count()
              << "\n";
    for (int i = 0; i < p.generator_count(); ++i)
      std::cout << "  " << p.generators[i].name << " appears " << generator_occurrences(p, i)
                << " time(s)\n";
  }
  return kExitOk;
}

int cmd_homology(const InputFile& in, bool as_json) {
  Presentation p = parse_presentation(in.contents);
  AbelianStructure h = abelianize(p);
  if (as_json) {
    ordered_json j = report_header("homology", in);
    j["homology"] = {{"group", homology_summary(h)},
                     {"invariant_factors", json_integers(h.invariant_factors)},
                     {"free_rank", h.free_rank},
                     {"conductor", h.conductor},
                     {"characters", character_count(h).str()}};
    emit(j);
  } else {
    std::cout << "homology: " << homology_summary(h) << "\n"
              << "free rank: " << h.free_rank << "\n"
              << "conductor: " << h.conductor << "\n"
              << "characters: " << character_count(h).str() << "\n";
  }
  return kExitOk;
}

int cmd_alexander(const InputFile& in, const std::string& character_opt, bool as_json) {
  Presentation p = parse_presentation(in.contents);
  check_generator_cap(p);
  AbelianStructure h = abelianize(p);
  AlexanderMatrix a = alexander_matrix(p, h);

  ordered_json j = report_header("alexander", in);
  std::string poly_text;
  bool zero = false;
  if (character_opt.empty()) {
    IntLaurent delta = alexander_poly(a, h);
    zero = delta.is_zero();
    poly_text = laurent_to_string(delta);
    j["alexander"] = {{"twisted", false}, {"polynomial", poly_text}, {"zero", zero}};
  } else {
    Character chi =
        character_from_exponents(h, parse_integer_list(character_opt, "--character"));
    CycLaurent delta = alexander_poly(a, h, chi);
    zero = delta.is_zero();
    poly_text = laurent_to_string(delta);
    j["alexander"] = {{"twisted", true},
                      {"character", json_character(chi)},
                      {"conductor", h.conductor},
                      {"polynomial", poly_text},
                      {"zero", zero}};
  }
  if (as_json)
    emit(j);
  else
    std::cout << "polynomial: " << poly_text << "\n";
  return kExitOk;
}

ordered_json inequality_json(const InequalityReport& rep) {
  ordered_json terms = ordered_json::array();
  for (const CharacterTerm& t : rep.terms)
    terms.push_back({{"character", json_character(t.chi)},
                     {"norm", t.norm.str()},
                     {"penalty", t.penalty.str()},
                     {"bound", Integer(t.norm - t.penalty).str()}});
  return ordered_json{{"class", json_integers(rep.cls)},
                      {"complex_norm", rational_str(rep.lhs)},
                      {"rank_one", rep.rank_one.str()},
                      {"terms", terms},
                      {"best_bound", rational_str(rep.rhs)},
                      {"holds", rep.holds},
                      {"equality", rep.equality}};
}

void print_inequality(const InequalityReport& rep) {
  std::cout << "class: (";
  for (size_t i = 0; i < rep.cls.size(); ++i)
    std::cout << (i ? ", " : "") << rep.cls[i].str();
  std::cout << ")\n";
  std::cout << "complex norm: " << rational_str(rep.lhs) << "\n";
  for (const CharacterTerm& t : rep.terms) {
    std::cout << "character (";
    for (size_t i = 0; i < t.chi.exponents.size(); ++i)
      std::cout << (i ? ", " : "") << t.chi.exponents[i].str();
    std::cout << (t.chi.is_trivial() ? ") [trivial]" : ")") << ": norm " << t.norm.str();
    if (t.penalty != 0) std::cout << ", penalty " << t.penalty.str();
    std::cout << ", bound " << Integer(t.norm - t.penalty).str() << "\n";
  }
  std::cout << "best bound: " << rational_str(rep.rhs) << "\n"
            << "holds: " << (rep.holds ? "yes" : "NO") << ", equality: "
            << (rep.equality ? "yes" : "no") << "\n";
}

int cmd_norms(const InputFile& in, const std::string& class_opt, const Integer& max_characters,
              bool as_json) {
  Presentation p = parse_presentation(in.contents);
  check_generator_cap(p);
  NormContext ctx = make_norm_context(p, max_characters);
  std::vector<Integer> cls = class_from_option(ctx.h, class_opt);
  InequalityReport rep = verify_inequality(ctx, cls);
  if (as_json) {
    ordered_json j = report_header("norms", in);
    j["norms"] = inequality_json(rep);
    emit(j);
  } else {
    print_inequality(rep);
  }
  return kExitOk;
}

int cmd_verify(const InputFile& in, const std::string& class_opt, int scan,
               const Integer& max_characters, long long max_scan, bool as_json) {
  Presentation p = parse_presentation(in.contents);
  check_generator_cap(p);
  NormContext ctx = make_norm_context(p, max_characters);

  std::vector<std::vector<Integer>> classes;
  if (!class_opt.empty()) {
    classes.push_back(class_from_option(ctx.h, class_opt));
  } else {
    if (scan < 0) throw DomainError("--scan needs a nonnegative bound");
    // all integer classes in [-scan, scan]^free_rank
    Integer count(1);
    for (int i = 0; i < ctx.h.free_rank; ++i) {
      count *= Integer(2 * scan + 1);
      if (count > max_scan)
        throw ResourceError("scan of radius " + std::to_string(scan) + " over rank " +
                            std::to_string(ctx.h.free_rank) + " exceeds " +
                            std::to_string(max_scan) + " classes");
    }
    // lexicographic order: the last coordinate varies fastest
    std::vector<Integer> cls(ctx.h.free_rank, Integer(-scan));
    for (;;) {
      classes.push_back(cls);
      int i = ctx.h.free_rank - 1;
      while (i >= 0 && cls[i] == scan) cls[i--] = -scan;
      if (i < 0) break;
      ++cls[i];
    }
  }

  long long violations = 0, equalities = 0;
  ordered_json results = ordered_json::array();
  for (const auto& cls : classes) {
    InequalityReport rep = verify_inequality(ctx, cls);
    if (!rep.holds) ++violations;
    if (rep.equality) ++equalities;
    if (as_json)
      results.push_back({{"class", json_integers(rep.cls)},
                         {"complex_norm", rational_str(rep.lhs)},
                         {"best_bound", rational_str(rep.rhs)},
                         {"holds", rep.holds},
                         {"equality", rep.equality}});
    else if (!rep.holds)
      std::cout << "VIOLATION at class " << inequality_json(rep)["class"].dump() << "\n";
  }

  if (as_json) {
    ordered_json j = report_header("verify", in);
    j["verify"] = {{"classes_checked", static_cast<long long>(classes.size())},
                   {"violations", violations},
                   {"equalities", equalities},
                   {"all_hold", violations == 0},
                   {"results", results}};
    emit(j);
  } else {
    std::cout << "classes checked: " << classes.size() << "\n"
              << "violations: " << violations << "\n"
              << "equalities: " << equalities << "\n"
              << (violations == 0 ? "all hold\n" : "INEQUALITY VIOLATED\n");
  }
  return violations == 0 ? kExitOk : kExitViolation;
}

int cmd_specialize(const InputFile& in, const std::string& class_opt,
                   const std::string& character_opt, bool as_json) {
  Presentation p = parse_presentation(in.contents);
  check_generator_cap(p);
  AbelianStructure h = abelianize(p);
  AlexanderMatrix a = alexander_matrix(p, h);
  std::vector<Integer> cls = class_from_option(h, class_opt);
  Character chi = character_opt.empty()
                      ? Character{std::vector<Integer>(h.invariant_factors.size(), Integer(0))}
                      : character_from_exponents(h, parse_integer_list(character_opt,
                                                                       "--character"));
  SpecializationCheck s = check_specialization(a, h, chi, cls);
  if (as_json) {
    ordered_json j = report_header("specialize", in);
    j["specialize"] = {{"class", json_integers(cls)},
                       {"character", json_character(chi)},
                       {"delta", laurent_to_string(s.delta)},
                       {"delta_zero", s.delta_zero},
                       {"delta_exponent", s.delta_exponent},
                       {"primitive", s.primitive},
                       {"regular", s.regular},
                       {"applicable", s.applicable},
                       {"specialized", laurent_to_string(s.specialized)},
                       {"expected_divisor", laurent_to_string(s.expected_divisor)},
                       {"span_delta", s.span_delta.str()},
                       {"span_specialized", s.span_specialized.str()},
                       {"span_ok", s.span_ok},
                       {"divisible", s.divisible}};
    emit(j);
  } else {
    std::cout << "polynomial: " << laurent_to_string(s.delta) << "\n";
    if (s.delta_zero) {
      std::cout << "polynomial is zero; nothing to check\n";
    } else {
      std::cout << "specialized gcd: " << laurent_to_string(s.specialized) << "\n"
                << "expected divisor: " << laurent_to_string(s.expected_divisor) << "\n"
                << "applicable: " << (s.applicable ? "yes" : "no")
                << " (primitive: " << (s.primitive ? "yes" : "no")
                << ", regular: " << (s.regular ? "yes" : "no") << ")\n"
                << "divisible: " << (s.divisible ? "yes" : "no") << ", span check: "
                << s.span_specialized.str() << " >= " << s.delta_exponent << " + "
                << s.span_delta.str() << " " << (s.span_ok ? "ok" : "FAILED") << "\n";
    }
  }
  return kExitOk;
}

int cmd_cw_norm(const InputFile& in, const std::string& cocycle_path, bool minimize,
                bool as_json) {
  nlohmann::json cj;
  try {
    cj = nlohmann::json::parse(in.contents);
  } catch (const nlohmann::json::parse_error& e) {
    throw CwError(std::string("complex file is not valid JSON: ") + e.what());
  }
  Complex2 c = complex_from_json(cj);
  ComplexInfo info = validate_complex(c);

  Cocycle k;
  if (!cocycle_path.empty()) {
    InputFile kf = read_input(cocycle_path);
    nlohmann::json kj;
    try {
      kj = nlohmann::json::parse(kf.contents);
    } catch (const nlohmann::json::parse_error& e) {
      throw CwError(std::string("cocycle file is not valid JSON: ") + e.what());
    }
    k = cocycle_from_json(kj, c, info);
  }
  if (!is_cocycle(c, info, k))
    throw CwError("the cochain violates a face relation or the boundary condition");

  Rational norm = cocycle_norm(c, info, k);
  ordered_json j = report_header("cw-norm", in);
  j["complex"] = {{"vertices", static_cast<long long>(c.vertices.size())},
                  {"edges", static_cast<long long>(c.edges.size())},
                  {"faces", static_cast<long long>(c.faces.size())}};
  j["cocycle"] = cocycle_to_json(k);
  j["norm"] = rational_str(norm);
  if (minimize) {
    MinimizeResult r = minimize_norm(c, info, k);
    ordered_json pot = ordered_json::object();
    for (const auto& [v, val] : r.potential) pot[v] = static_cast<long long>(val);
    j["minimized"] = {{"value", rational_str(r.value)},
                      {"minimizer", cocycle_to_json(r.minimizer)},
                      {"potential", pot}};
  }
  if (as_json) {
    emit(j);
  } else {
    std::cout << "complex: " << c.vertices.size() << " vertices, " << c.edges.size()
              << " edges, " << c.faces.size() << " faces\n"
              << "cocycle norm: " << rational_str(norm) << "\n";
    if (minimize)
      std::cout << "minimum over the class: " << j["minimized"]["value"].get<std::string>()
                << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact norms and Alexander-type polynomials of finitely presented groups"};
  app.require_subcommand(1);

  std::string file, class_opt, character_opt, cocycle_opt;
  bool as_json = false, minimize = false;
  int scan = 2;
  long long max_characters = 4096, max_scan = 20000;

  auto add_common = [&](CLI::App* sub, bool needs_file = true) {
    if (needs_file) sub->add_option("file", file, "input file")->required();
    sub->add_flag("--json", as_json, "emit a JSON report on stdout");
  };

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse a presentation and echo it");
  add_common(parse_cmd);

  CLI::App* hom_cmd = app.add_subcommand("homology", "first homology of the presentation");
  add_common(hom_cmd);

  CLI::App* alex_cmd =
      app.add_subcommand("alexander", "Alexander-type polynomial, optionally twisted");
  add_common(alex_cmd);
  alex_cmd->add_option("--character", character_opt,
                       "torsion character exponents, e.g. 0,1");

  CLI::App* norms_cmd =
      app.add_subcommand("norms", "norms and the comparison report for one class");
  add_common(norms_cmd);
  norms_cmd->add_option("--class", class_opt, "cohomology class coordinates, e.g. 1,-2")
      ->required();
  norms_cmd->add_option("--max-characters", max_characters, "character count guard");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "verify the norm comparison over a class or a scan box");
  add_common(verify_cmd);
  verify_cmd->add_option("--class", class_opt, "single class to check");
  verify_cmd->add_option("--scan", scan, "check all classes with coordinates in [-B, B]");
  verify_cmd->add_option("--max-characters", max_characters, "character count guard");
  verify_cmd->add_option("--max-scan", max_scan, "scan size guard");

  CLI::App* spec_cmd =
      app.add_subcommand("specialize", "one-variable specialization consistency check");
  add_common(spec_cmd);
  spec_cmd->add_option("--class", class_opt, "cohomology class coordinates")->required();
  spec_cmd->add_option("--character", character_opt, "torsion character exponents");

  CLI::App* cw_cmd =
      app.add_subcommand("cw-norm", "weighted cocycle norm on an explicit 2-complex");
  add_common(cw_cmd);
  cw_cmd->add_option("--cocycle", cocycle_opt, "JSON file of edge: integer values");
  cw_cmd->add_flag("--minimize", minimize, "minimize over the cohomology class");

  CLI11_PARSE(app, argc, argv);

  try {
    InputFile in = read_input(file);
    if (app.got_subcommand(parse_cmd)) return cmd_parse(in, as_json);
    if (app.got_subcommand(hom_cmd)) return cmd_homology(in, as_json);
    if (app.got_subcommand(alex_cmd)) return cmd_alexander(in, character_opt, as_json);
    if (app.got_subcommand(norms_cmd))
      return cmd_norms(in, class_opt, Integer(max_characters), as_json);
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(in, class_opt, scan, Integer(max_characters), max_scan, as_json);
    if (app.got_subcommand(spec_cmd))
      return cmd_specialize(in, class_opt, character_opt, as_json);
    if (app.got_subcommand(cw_cmd)) return cmd_cw_norm(in, cocycle_opt, minimize, as_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (line " << e.line << ", column " << e.column
              << ")\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const CwError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
