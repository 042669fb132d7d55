#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pqgroup/cayley_io.hpp"
#include "pqgroup/classification.hpp"
#include "pqgroup/enumerate.hpp"
#include "pqgroup/error.hpp"
#include "pqgroup/group.hpp"
#include "pqgroup/morphism.hpp"
#include "pqgroup/product.hpp"
#include "pqgroup/recognition.hpp"
#include "pqgroup/subgroup.hpp"

namespace pqgroup::cli {
namespace {

using json = nlohmann::ordered_json;

// Failures tied to a specific exit code.
struct Exit {
  int code;
  std::string message;
};

GroupPtr load(const std::string& path) {
  try {
    return read_cayley_file(path);
  } catch (const GroupError& e) {
    throw Exit{kInput, path + ": " + e.what()};
  }
}

std::string join_indices(const std::vector<Index>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::vector<Index> parse_index_list(const std::string& text, std::size_t order, const char* flag) {
  std::vector<Index> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    if (!item.empty()) {
      unsigned long v = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc() || ptr != item.data() + item.size() || v >= order) {
        throw Exit{kUsage, std::string(flag) + ": bad element index '" + item + "'"};
      }
      out.push_back(static_cast<Index>(v));
    }
    pos = end + 1;
  }
  return out;
}

void emit_group(const FiniteGroup& g, const std::string& out_path, std::string_view comment, std::ostream& out) {
  if (out_path.empty()) {
    write_cayley(out, g, comment);
    return;
  }
  write_cayley_file(out_path, g, comment);
}

void row(std::ostream& out, std::string_view key, const std::string& value) {
  out << std::left << std::setw(16) << key << value << '\n';
}

// construct -----------------------------------------------------------------

int construct_cyclic(std::uint64_t n, const std::string& out_path, std::ostream& out) {
  const GroupPtr g = cyclic_group(n);
  emit_group(*g, out_path, "cyclic group of order " + std::to_string(n), out);
  return kOk;
}

int construct_sdp(std::uint64_t q, std::uint64_t p, std::uint64_t k, const std::string& out_path, std::ostream& out) {
  const ProductGroup pg = [&] {
    try {
      return cyclic_semidirect(q, p, k);
    } catch (const GroupError& e) {
      throw Exit{kUsage, e.what()};
    }
  }();
  std::ostringstream c;
  c << "C" << q << " x| C" << p << ", generator acts as r -> r^" << k << "; element (a,b) = " << p << "*a + b";
  emit_group(*pg.group, out_path, c.str(), out);
  return kOk;
}

int construct_direct(const std::string& a, const std::string& b, const std::string& out_path, std::ostream& out) {
  const GroupPtr ga = load(a);
  const GroupPtr gb = load(b);
  const ProductGroup pg = direct_product(ga, gb);
  std::ostringstream c;
  c << "direct product of orders " << ga->order() << " and " << gb->order() << "; element (a,b) = "
    << gb->order() << "*a + b";
  emit_group(*pg.group, out_path, c.str(), out);
  return kOk;
}

// classify ------------------------------------------------------------------

int classify_cmd(const std::string& path, bool as_json, const std::string& out_path, std::ostream& out) {
  const GroupPtr g = load(path);
  const ClassificationResult r = classify(g);
  const Iso& iso = witness(r);
  validate(iso);

  json j;
  j["file"] = path;
  j["order"] = g->order();
  j["class"] = std::string(tag(r));
  const OrderShape shape = order_shape(g->order());
  j["p"] = shape.p;
  j["q"] = shape.q;
  if (const auto* c = std::get_if<CyclicClass>(&r)) {
    j["generator"] = c->generator.index;
  } else if (const auto* s = std::get_if<SemidirectClass>(&r)) {
    j["k"] = s->k;
    j["phi"] = s->phi.map();
  }
  j["iso"] = iso.forward().map();

  if (!out_path.empty()) {
    write_cayley_file(out_path, *representative(r), std::string("representative for ") + std::string(tag(r)));
  }
  if (as_json) {
    out << j.dump(2) << '\n';
    return kOk;
  }
  row(out, "class", j["class"].get<std::string>());
  row(out, "order", std::to_string(g->order()));
  row(out, "p", std::to_string(shape.p));
  row(out, "q", std::to_string(shape.q));
  if (const auto* c = std::get_if<CyclicClass>(&r)) {
    row(out, "generator", std::to_string(c->generator.index));
  } else if (const auto* s = std::get_if<SemidirectClass>(&r)) {
    row(out, "k", std::to_string(s->k));
    row(out, "phi", "generator of C" + std::to_string(s->p) + " acts on C" + std::to_string(s->q) + " as r -> r^" +
                        std::to_string(s->k));
  }
  row(out, "iso", join_indices(iso.forward().map()));
  return kOk;
}

// iso / aut -----------------------------------------------------------------

int iso_cmd(const std::string& a, const std::string& b, bool as_json, std::ostream& out) {
  const GroupPtr ga = load(a);
  const GroupPtr gb = load(b);
  const std::string reason = fingerprint_mismatch(fingerprint(*ga), fingerprint(*gb));
  std::optional<Iso> iso;
  if (reason.empty()) iso = find_isomorphism(ga, gb);

  if (as_json) {
    json j;
    j["isomorphic"] = iso.has_value();
    if (iso) {
      j["map"] = iso->forward().map();
    } else {
      j["reason"] = reason.empty() ? "no isomorphism exists" : reason;
    }
    out << j.dump(2) << '\n';
  } else if (iso) {
    out << "isomorphic\n";
    row(out, "map", join_indices(iso->forward().map()));
  } else {
    out << "not isomorphic: " << (reason.empty() ? "no isomorphism exists" : reason) << '\n';
  }
  return iso ? kOk : kNegative;
}

int aut_cmd(const std::string& path, bool as_json, std::ostream& out) {
  const GroupPtr g = load(path);
  const AutGroupPtr aut = automorphism_group(g);
  const auto gen = is_cyclic(*aut->carrier);
  if (as_json) {
    json j;
    j["order"] = aut->carrier->order();
    j["cyclic"] = gen.has_value();
    if (gen) j["generator"] = aut->autos[gen->index].forward().map();
    out << j.dump(2) << '\n';
    return kOk;
  }
  row(out, "order", std::to_string(aut->carrier->order()));
  row(out, "cyclic", gen ? "yes" : "no");
  if (gen) row(out, "generator", join_indices(aut->autos[gen->index].forward().map()));
  return kOk;
}

// recognize -----------------------------------------------------------------

int recognize_cmd(const std::string& path, const std::string& n_list, const std::string& h_list,
                  const std::string& out_path, bool as_json, std::ostream& out) {
  const GroupPtr g = load(path);
  const Subgroup n = closure(g, std::span<const Index>(parse_index_list(n_list, g->order(), "--n")));
  const Subgroup h = closure(g, std::span<const Index>(parse_index_list(h_list, g->order(), "--h")));

  const bool direct = is_normal(n) && is_normal(h);
  const ProductGroup* product = nullptr;
  const Iso* iso = nullptr;
  std::optional<DirectDecomposition> dd;
  std::optional<DecompositionWitness> sd;
  if (direct) {
    dd = internal_direct(g, n, h);
    product = &dd->product;
    iso = &dd->iso;
  } else {
    sd = internal_semidirect(g, n, h);
    product = &sd->product;
    iso = &sd->iso;
  }
  validate(*iso);
  const bool trivial_action = direct || sd->phi.is_trivial();
  const std::string kind = direct ? "direct" : "semidirect";

  if (!out_path.empty()) write_cayley_file(out_path, *product->group, kind + " product");
  if (as_json) {
    json j;
    j["decomposition"] = kind;
    j["n"] = n.members();
    j["h"] = h.members();
    j["action"] = trivial_action ? "trivial" : "conjugation";
    j["product_order"] = product->group->order();
    j["iso"] = iso->forward().map();
    if (out_path.empty()) j["product"] = to_cayley_string(*product->group);
    out << j.dump(2) << '\n';
    return kOk;
  }
  row(out, "decomposition", kind);
  row(out, "N", join_indices(n.members()));
  row(out, "H", join_indices(h.members()));
  row(out, "action", trivial_action ? "trivial" : "conjugation");
  row(out, "iso", join_indices(iso->forward().map()));
  if (out_path.empty()) {
    out << "product\n";
    write_cayley(out, *product->group);
  }
  return kOk;
}

// enumerate / verify --------------------------------------------------------

int enumerate_cmd(std::size_t n, bool extended, const std::string& out_dir, bool as_json, std::ostream& out) {
  EnumerationOptions options;
  options.extended = extended;
  if (!within_enumeration_budget(n, options)) {
    throw Exit{kUsage, "order " + std::to_string(n) + " is outside the enumeration budget" +
                           (extended ? "" : " (try --extended for prime, p^2 or pq orders up to 33)")};
  }
  const EnumerationReport report = enumerate_groups(n, options);
  std::vector<std::string> files;
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t k = 0; k < report.representatives.size(); ++k) {
      const std::string name = "order" + std::to_string(n) + "_class" + std::to_string(k + 1) + ".cayley";
      write_cayley_file(std::filesystem::path(out_dir) / name, *report.representatives[k]);
      files.push_back(name);
    }
  }
  if (as_json) {
    json j;
    j["order"] = n;
    j["count"] = report.count;
    j["nodes"] = report.stats.nodes;
    j["tables_completed"] = report.stats.tables_completed;
    j["tables_rejected"] = report.stats.tables_rejected;
    j["iso_rejections"] = report.stats.iso_rejections;
    if (!files.empty()) j["files"] = files;
    out << j.dump(2) << '\n';
    return kOk;
  }
  row(out, "order", std::to_string(n));
  row(out, "count", std::to_string(report.count));
  row(out, "nodes", std::to_string(report.stats.nodes));
  row(out, "completed", std::to_string(report.stats.tables_completed));
  row(out, "rejected", std::to_string(report.stats.tables_rejected));
  row(out, "iso_rejections", std::to_string(report.stats.iso_rejections));
  for (const std::string& f : files) row(out, "wrote", f);
  return kOk;
}

int verify_cmd(std::size_t max_order, bool as_json, std::ostream& out) {
  if (max_order < 2 || max_order > kExtendedEnumerationOrder) {
    throw Exit{kUsage, "--max must be between 2 and " + std::to_string(kExtendedEnumerationOrder)};
  }
  const TheoremReport report = verify_theorem(max_order);
  if (as_json) {
    json j;
    j["max_order"] = max_order;
    j["all_pass"] = report.all_pass;
    json rows = json::array();
    for (const TheoremRow& r : report.rows) {
      json x;
      x["order"] = r.order;
      x["shape"] = r.shape;
      x["p"] = r.p;
      x["q"] = r.q;
      x["predicted"] = r.predicted;
      x["oracle"] = r.oracle;
      x["classes"] = r.tags;
      x["pass"] = r.pass;
      if (!r.note.empty()) x["note"] = r.note;
      rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
  } else {
    out << std::left << std::setw(7) << "order" << std::setw(7) << "shape" << std::setw(4) << "p" << std::setw(4)
        << "q" << std::setw(11) << "predicted" << std::setw(8) << "oracle" << std::setw(6) << "pass"
        << "classes\n";
    for (const TheoremRow& r : report.rows) {
      std::string classes;
      for (const auto& t : r.tags) classes += (classes.empty() ? "" : ",") + t;
      if (!r.note.empty()) classes += " (" + r.note + ")";
      out << std::left << std::setw(7) << r.order << std::setw(7) << r.shape << std::setw(4) << r.p << std::setw(4)
          << r.q << std::setw(11) << r.predicted << std::setw(8) << r.oracle << std::setw(6)
          << (r.pass ? "yes" : "NO") << classes << '\n';
    }
    out << (report.all_pass ? "all orders agree\n" : "FAILURES present\n");
  }
  return report.all_pass ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite groups as Cayley tables: construction, recognition and classification of orders p^2 and pq.",
               "pqgroup"};
  app.require_subcommand(1);
  app.fallthrough(false);

  int code = kOk;
  std::function<int()> action;
  std::string out_path;
  bool as_json = false;

  auto* construct = app.add_subcommand("construct", "Build a group and write its Cayley table");
  construct->require_subcommand(1);
  std::uint64_t cyc_n = 0;
  auto* c_cyclic = construct->add_subcommand("cyclic", "Cyclic group of order n");
  c_cyclic->add_option("n", cyc_n, "Order")->required()->check(CLI::Range(1, 4096));
  c_cyclic->add_option("--out", out_path, "Output file (default: stdout)");
  c_cyclic->callback([&] { action = [&] { return construct_cyclic(cyc_n, out_path, out); }; });

  std::uint64_t sdp_q = 0, sdp_p = 0, sdp_k = 0;
  auto* c_sdp = construct->add_subcommand("sdp", "C_q x| C_p with the generator of C_p acting as r -> r^k");
  c_sdp->add_option("q", sdp_q, "Order of the normal factor")->required()->check(CLI::Range(1, 4096));
  c_sdp->add_option("p", sdp_p, "Order of the acting factor")->required()->check(CLI::Range(1, 4096));
  c_sdp->add_option("--k", sdp_k, "Exponent of the action")->required();
  c_sdp->add_option("--out", out_path, "Output file (default: stdout)");
  c_sdp->callback([&] { action = [&] { return construct_sdp(sdp_q, sdp_p, sdp_k, out_path, out); }; });

  std::string file_a, file_b;
  auto* c_direct = construct->add_subcommand("direct", "Direct product of two groups given as files");
  c_direct->add_option("a", file_a, "First factor")->required();
  c_direct->add_option("b", file_b, "Second factor")->required();
  c_direct->add_option("--out", out_path, "Output file (default: stdout)");
  c_direct->callback([&] { action = [&] { return construct_direct(file_a, file_b, out_path, out); }; });

  auto* classify_sc = app.add_subcommand("classify", "Classify a group of order p^2 or pq");
  classify_sc->add_option("file", file_a, "Cayley table file")->required();
  classify_sc->add_option("--out", out_path, "Write the class representative to this file");
  classify_sc->add_flag("--json", as_json, "Machine-readable output");
  classify_sc->callback([&] { action = [&] { return classify_cmd(file_a, as_json, out_path, out); }; });

  auto* iso_sc = app.add_subcommand("iso", "Test two groups for isomorphism");
  iso_sc->add_option("a", file_a, "First group")->required();
  iso_sc->add_option("b", file_b, "Second group")->required();
  iso_sc->add_flag("--json", as_json, "Machine-readable output");
  iso_sc->callback([&] { action = [&] { return iso_cmd(file_a, file_b, as_json, out); }; });

  auto* aut_sc = app.add_subcommand("aut", "Order and cyclicity of the automorphism group");
  aut_sc->add_option("file", file_a, "Cayley table file")->required();
  aut_sc->add_flag("--json", as_json, "Machine-readable output");
  aut_sc->callback([&] { action = [&] { return aut_cmd(file_a, as_json, out); }; });

  std::string n_list, h_list;
  auto* rec_sc = app.add_subcommand("recognize", "Recognize G as an internal (semi)direct product of N and H");
  rec_sc->set_help_flag("--help", "Print this help message and exit");
  rec_sc->add_option("file", file_a, "Cayley table file")->required();
  rec_sc->add_option("--n", n_list, "Comma-separated generators of the normal subgroup N")->required();
  rec_sc->add_option("--h", h_list, "Comma-separated generators of the complement H")->required();
  rec_sc->add_option("--out", out_path, "Write the external product to this file");
  rec_sc->add_flag("--json", as_json, "Machine-readable output");
  rec_sc->callback([&] { action = [&] { return recognize_cmd(file_a, n_list, h_list, out_path, as_json, out); }; });

  std::size_t enum_n = 0;
  bool extended = false;
  std::string out_dir;
  auto* enum_sc = app.add_subcommand("enumerate", "List all groups of order n up to isomorphism");
  enum_sc->add_option("n", enum_n, "Order")->required()->check(CLI::PositiveNumber);
  enum_sc->add_option("--out", out_dir, "Directory for order<n>_class<k>.cayley files");
  enum_sc->add_flag("--extended", extended, "Allow prime, p^2 and pq orders up to 33");
  enum_sc->add_flag("--json", as_json, "Machine-readable output");
  enum_sc->callback([&] { action = [&] { return enumerate_cmd(enum_n, extended, out_dir, as_json, out); }; });

  std::size_t max_order = 0;
  auto* verify_sc = app.add_subcommand("verify", "Check the p^2 / pq classification against exhaustive enumeration");
  verify_sc->add_option("--max", max_order, "Largest order to check")->required();
  verify_sc->add_flag("--json", as_json, "Machine-readable output");
  verify_sc->callback([&] { action = [&] { return verify_cmd(max_order, as_json, out); }; });

  std::vector<std::string> argv_store{"pqgroup"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    code = action();
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    code = e.code;
  } catch (const GroupError& e) {
    err << "error: " << e.what() << '\n';
    code = e.kind() == ErrorKind::Parse ? kInput : kNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = kNegative;
  }
  return code;
}

}  // namespace pqgroup::cli
