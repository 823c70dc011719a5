// powmon: exact sumset arithmetic over N and Q>=0, numerical/Puiseux
// monoid utilities, eventual sumset structure, and the reduced-power-
// monoid gallery. Output is byte-deterministic for a fixed invocation.

#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powmon/error.hpp"
#include "powmon/finmon.hpp"
#include "powmon/nathanson.hpp"
#include "powmon/natset.hpp"
#include "powmon/numsgp.hpp"
#include "powmon/qset.hpp"
#include "powmon/rat.hpp"
#include "powmon/scaling.hpp"
#include "powmon/stabilize.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace powmon;

enum class Format { text, json, csv };

Format parse_format(const std::string& f) {
  if (f == "json") return Format::json;
  if (f == "csv") return Format::csv;
  return Format::text;
}

std::string csv_cell(const std::string& v) {
  if (v.find_first_of(",\"") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string scalar_or_list(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array()) return v.dump();
  std::string s;
  for (const auto& e : v) {
    if (!s.empty()) s += ',';
    s += e.is_string() ? e.get<std::string>() : e.dump();
  }
  return s;
}

void emit_csv_header(const json& obj) {
  std::string header;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!header.empty()) header += ',';
    header += it.key();
  }
  std::cout << header << "\n";
}

void emit_csv_row(const json& obj) {
  std::string row;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!row.empty()) row += ',';
    row += csv_cell(scalar_or_list(*it));
  }
  std::cout << row << "\n";
}

void emit_text_row(const json& obj) {
  std::string text;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!text.empty()) text += ' ';
    text += it.key() + "=" + scalar_or_list(*it);
  }
  std::cout << text << "\n";
}

// Single-object report; scans print the CSV header themselves.
void emit_object(Format fmt, const json& obj) {
  switch (fmt) {
    case Format::json:
      std::cout << obj.dump() << "\n";
      break;
    case Format::csv:
      emit_csv_header(obj);
      emit_csv_row(obj);
      break;
    case Format::text:
      emit_text_row(obj);
      break;
  }
}

json natset_json(const NatSet& s) {
  json arr = json::array();
  for (Elem e : s.elements()) arr.push_back(e);
  return arr;
}

json elems_json(const std::vector<Elem>& v) {
  json arr = json::array();
  for (Elem e : v) arr.push_back(e);
  return arr;
}

json qset_json(const QSet& s) {
  json arr = json::array();
  for (const Rat& v : s.values()) arr.push_back(v.to_string());
  return arr;
}

json rats_json(const std::vector<Rat>& v) {
  json arr = json::array();
  for (const Rat& r : v) arr.push_back(r.to_string());
  return arr;
}

json scan_row_json(const ScanRow& row) {
  const auto& s = row.structure;
  json obj;
  obj["set"] = natset_json(row.set);
  obj["b"] = s.b;
  obj["c"] = s.c;
  obj["B"] = elems_json(s.B);
  obj["C"] = elems_json(s.C);
  obj["k_star"] = s.k_star;
  obj["gw_bound"] = s.bound_gw;
  obj["a2n_bound"] = s.bound_a2n;
  obj["gw_ok"] = row.gw_ok;
  return obj;
}

bool rational_literal(const std::string& lit) {
  return lit.find('/') != std::string::npos;
}

std::vector<Rat> parse_generators(const std::string& lit) {
  std::vector<Rat> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = lit.find(',', pos);
    const std::string tok =
        lit.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      out.push_back(Rat::parse(tok));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("generator literal: position " +
                                  std::to_string(pos + 1) + ": bad token '" +
                                  tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// ---- subcommand bodies ----

int cmd_pairwise(const std::string& x_lit, const std::string& y_lit,
                 std::optional<std::uint64_t> k, Format fmt) {
  json obj;
  std::string text;
  if (rational_literal(x_lit) || (!k && rational_literal(y_lit))) {
    const QSet x = QSet::parse(x_lit);
    const QSet res = k ? kfold(x, *k) : sumset(x, QSet::parse(y_lit));
    obj["set"] = qset_json(res);
    text = res.to_string();
  } else {
    const NatSet x = NatSet::parse(x_lit);
    const NatSet res = k ? kfold(x, *k) : sumset(x, NatSet::parse(y_lit));
    obj["set"] = natset_json(res);
    text = res.to_string();
  }
  if (fmt == Format::text)
    std::cout << text << "\n";
  else
    emit_object(fmt, obj);
  return 0;
}

int cmd_nathanson(const std::string& lit, Format fmt) {
  ScanRow row;
  row.set = NatSet::parse(lit);
  row.structure = canonical_structure(row.set);
  row.gw_ok = std::int64_t(row.structure.k_star) <= row.structure.bound_gw;
  emit_object(fmt, scan_row_json(row));
  return 0;
}

int cmd_bounds_scan(Elem max_a, std::uint64_t from, std::uint64_t to,
                    bool strict, Format fmt) {
  bool header_done = false;
  std::uint64_t index = 0;
  std::uint64_t violations = 0;
  bound_scan(max_a, [&](const ScanRow& row) {
    const std::uint64_t i = index++;
    if (i < from || i > to) return;
    if (!row.gw_ok) ++violations;
    const json obj = scan_row_json(row);
    switch (fmt) {
      case Format::csv:
        if (!header_done) {
          emit_csv_header(obj);
          header_done = true;
        }
        emit_csv_row(obj);
        break;
      case Format::json:
        std::cout << obj.dump() << "\n";
        break;
      case Format::text:
        emit_text_row(obj);
        break;
    }
  });
  if (violations > 0) {
    std::cerr << "powmon: " << violations
              << " set(s) exceeded the a-n+1 bound\n";
    if (strict) return 1;
  }
  return 0;
}

int cmd_stabilize(const std::string& lit, std::uint64_t window, Format fmt) {
  const StabilizationReport rep =
      stabilization_onset(QSet::parse(lit), window);
  json obj;
  obj["set"] = qset_json(rep.input);
  obj["h_min"] = rep.h_min;
  obj["threshold"] = rep.threshold;
  obj["window"] = rep.window;
  emit_object(fmt, obj);
  return 0;
}

int cmd_monoid(const std::string& lit, Format fmt) {
  const std::vector<Rat> gens = parse_generators(lit);
  bool integral = true;
  for (const Rat& g : gens) integral = integral && g.is_integer();
  json obj;
  if (integral) {
    std::vector<Elem> igens;
    for (const Rat& g : gens) igens.push_back(g.num);
    const auto m = NumericalMonoid::generate(std::move(igens));
    obj["generators"] = elems_json(m.generators());
    obj["atoms"] = elems_json(m.atoms());
    obj["frobenius"] = m.frobenius();
    obj["gaps"] = elems_json(m.gaps());
  } else {
    // rational generators: Frobenius data reported over the reduced
    // integer model (cleared denominators divided by their gcd)
    const auto p = PuiseuxFG::from_generators(gens);
    std::vector<Elem> reduced = p.integer_model();
    Elem g = 0;
    for (Elem v : reduced) g = std::gcd(g, v);
    for (Elem& v : reduced) v /= g;
    const auto m = NumericalMonoid::generate(std::move(reduced));
    obj["generators"] = rats_json(gens);
    obj["atoms"] = rats_json(p.atoms());
    obj["frobenius"] = m.frobenius();
    obj["gaps"] = elems_json(m.gaps());
  }
  emit_object(fmt, obj);
  return 0;
}

int cmd_iso(const std::string& lit1, const std::string& lit2, Format fmt) {
  const auto s1 = PuiseuxFG::from_generators(parse_generators(lit1));
  const auto s2 = PuiseuxFG::from_generators(parse_generators(lit2));
  const auto q = find_scaling_iso(s1, s2);
  if (fmt == Format::text) {
    std::cout << (q ? q->to_string() : "none") << "\n";
    return 0;
  }
  json obj;
  obj["q"] = q ? json(q->to_string()) : json(nullptr);
  emit_object(fmt, obj);
  return 0;
}

int cmd_recover(const std::string& ratio_lit, const std::string& monoid_lit,
                const std::string& probes_lit, std::uint64_t samples,
                std::uint64_t seed, Format fmt) {
  const Rat q = Rat::parse(ratio_lit);
  const auto source = PuiseuxFG::from_generators(parse_generators(monoid_lit));
  std::vector<Rat> target_gens;
  for (const Rat& a : source.atoms()) target_gens.push_back(q * a);
  const ScalingHom f(q, source,
                     PuiseuxFG::from_generators(std::move(target_gens)));

  const std::vector<Rat> probes =
      probes_lit.empty() ? source.atoms() : parse_generators(probes_lit);
  const auto res =
      recover_scaling([&](const QSet& x) { return f.apply(x); }, probes);
  if (!res.ok()) {
    std::cerr << "powmon: recovery failed: " << res.failure << "\n";
    return 1;
  }

  // seeded sample of subset pairs for the homomorphism law
  std::mt19937_64 rng(seed);
  const auto pick = [&] {
    std::vector<Rat> vals{Rat()};
    const int n = int(rng() % 4);
    for (int j = 0; j < n; ++j) {
      Rat v;
      const int terms = 1 + int(rng() % 3);
      for (int t = 0; t < terms; ++t)
        v = v + source.atoms()[rng() % source.atoms().size()];
      vals.push_back(v);
    }
    return QSet::make(vals);
  };
  std::vector<std::pair<QSet, QSet>> pairs;
  for (std::uint64_t i = 0; i < samples; ++i)
    pairs.emplace_back(pick(), pick());
  const bool hom = lift_is_homomorphism(f, pairs);

  json obj;
  obj["q"] = res.ratio->to_string();
  obj["homomorphism"] = hom;
  emit_object(fmt, obj);
  if (*res.ratio != q || !hom) {
    std::cerr << "powmon: recovered ratio disagrees with the lift\n";
    return 1;
  }
  return 0;
}

int cmd_gallery(std::uint64_t max_v, Format fmt) {
  bool header_done = false;
  for (std::uint64_t v = 1; v <= max_v; ++v) {
    const GalleryRow row = gallery_row(v);
    json obj;
    obj["v"] = row.v;
    obj["fpm_equal"] = row.fpm_equal;
    obj["isomorphic"] = row.isomorphic;
    switch (fmt) {
      case Format::csv:
        if (!header_done) {
          emit_csv_header(obj);
          header_done = true;
        }
        emit_csv_row(obj);
        break;
      case Format::json:
        std::cout << obj.dump() << "\n";
        break;
      case Format::text:
        emit_text_row(obj);
        break;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sumset arithmetic and power-monoid utilities"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t window = 50;
  std::uint64_t seed = 0;
  bool strict = false;

  std::string x_lit, y_lit, probes_lit, monoid_lit, ratio_lit;
  std::uint64_t k = 0;
  Elem max_a = 8;
  std::uint64_t from = 0, to = ~std::uint64_t{0};
  std::uint64_t max_v = 3;
  std::uint64_t samples = 20;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* sum = app.add_subcommand("sumset", "setwise sum of two sets");
  sum->add_option("x", x_lit)->required();
  sum->add_option("y", y_lit)->required();
  add_format(sum);

  auto* kf = app.add_subcommand("kfold", "k-fold sum of a set");
  kf->add_option("x", x_lit)->required();
  kf->add_option("k", k)->required();
  add_format(kf);

  auto* nath = app.add_subcommand(
      "nathanson", "canonical eventual structure of the k-fold sums");
  nath->add_option("set", x_lit)->required();
  add_format(nath);

  auto* scan = app.add_subcommand(
      "bounds-scan", "structure of every gcd-1 set with max <= max-a");
  scan->add_option("--max-a", max_a, "largest maximum element")->required();
  scan->add_option("--from", from, "first row index");
  scan->add_option("--to", to, "last row index");
  scan->add_flag("--strict", strict,
                 "exit 1 when a set exceeds the a-n+1 bound");
  add_format(scan);

  auto* stab = app.add_subcommand(
      "stabilize", "least h with (k+1)A = kA + {0, max A} from h on");
  stab->add_option("set", x_lit)->required();
  stab->add_option("--window", window, "persistence window (default 50)");
  add_format(stab);

  auto* mon = app.add_subcommand(
      "monoid", "atoms, Frobenius number and gaps of a f.g. monoid");
  mon->add_option("generators", x_lit)->required();
  add_format(mon);

  auto* iso = app.add_subcommand(
      "iso", "scaling isomorphism between two f.g. monoids, if any");
  iso->add_option("g1", x_lit)->required();
  iso->add_option("g2", y_lit)->required();
  add_format(iso);

  auto* rec = app.add_subcommand(
      "recover", "round-trip a scaling through its set-level lift");
  rec->add_option("ratio", ratio_lit)->required();
  rec->add_option("--monoid", monoid_lit, "source monoid generators")
      ->required();
  rec->add_option("--probes", probes_lit, "probe atoms (default: all atoms)");
  rec->add_option("--samples", samples, "sampled set pairs (default 20)");
  rec->add_option("--seed", seed, "sampling seed");
  add_format(rec);

  auto* gal = app.add_subcommand(
      "gallery", "left-zero unitizations vs. their opposites");
  gal->add_option("--max-v", max_v, "largest carrier size (default 3)");
  add_format(gal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Format fmt = parse_format(format);
    if (sum->parsed()) return cmd_pairwise(x_lit, y_lit, std::nullopt, fmt);
    if (kf->parsed()) return cmd_pairwise(x_lit, "", k, fmt);
    if (nath->parsed()) return cmd_nathanson(x_lit, fmt);
    if (scan->parsed()) return cmd_bounds_scan(max_a, from, to, strict, fmt);
    if (stab->parsed()) return cmd_stabilize(x_lit, window, fmt);
    if (mon->parsed()) return cmd_monoid(x_lit, fmt);
    if (iso->parsed()) return cmd_iso(x_lit, y_lit, fmt);
    if (rec->parsed())
      return cmd_recover(ratio_lit, monoid_lit, probes_lit, samples, seed,
                         fmt);
    if (gal->parsed()) return cmd_gallery(max_v, fmt);
  } catch (const VerificationError& e) {
    std::cerr << "powmon: verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "powmon: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
