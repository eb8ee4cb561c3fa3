#include "sdlkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>

#include "sdlkit/analyze.hpp"
#include "sdlkit/generators.hpp"
#include "sdlkit/io.hpp"

namespace sdlkit::cli {

namespace {

enum class Format { Text, KeyValue };

// Ordered report. Text output keeps insertion order; key-value output is
// sorted by key.
class Report {
 public:
  void add(std::string key, std::string label, std::string value) {
    entries_.push_back({std::move(key), std::move(label), std::move(value)});
  }

  void print(std::ostream& os, Format format) const {
    if (format == Format::Text) {
      for (const auto& e : entries_) os << e.label << ": " << e.value << '\n';
      return;
    }
    std::map<std::string, std::string> sorted;
    for (const auto& e : entries_) sorted[e.key] = e.value;
    for (const auto& [k, v] : sorted) os << k << '=' << v << '\n';
  }

 private:
  struct Entry {
    std::string key, label, value;
  };
  std::vector<Entry> entries_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_names(const std::vector<Element>& xs, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += xs[i] < names.size() ? names[xs[i]] : std::to_string(xs[i]);
  }
  return s;
}

// "reason at (a,b,c)" with witness elements rendered by name.
std::string named(const Verdict& v, const std::vector<std::string>& names) {
  if (v.holds) return "ok";
  std::string s = v.reason;
  if (!v.witness.empty()) {
    std::string w = join_names(v.witness, names);
    std::replace(w.begin(), w.end(), ' ', ',');
    s += " at (" + w + ")";
  }
  return s;
}

void add_verdict(Report& r, const std::string& key, const std::string& label, const Verdict& v,
                 const std::vector<std::string>& names) {
  r.add(key, label, yes_no(v.holds));
  if (!v.holds) r.add(key + ".reason", label + " failure", named(v, names));
}

struct Options {
  std::string out;
  std::string format = "text";
  std::string flavor;
  bool no_self_check = false;
};

Format format_of(const Options& o) { return o.format == "kv" ? Format::KeyValue : Format::Text; }

AddFlavor flavor_or(const Options& o, AddFlavor fallback) {
  if (o.flavor.empty()) return fallback;
  return o.flavor == "right" ? AddFlavor::RightZero : AddFlavor::LeftZero;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) out << text;
  else io::write_file(o.out, text);
}

io::Structure load(const std::string& path) { return io::parse(io::read_file(path)); }

// Family and element names of a loaded family or instance-spec file.
struct LoadedFamily {
  FamilyInstance instance;
  std::vector<std::string> lattice_names;
  std::vector<std::vector<std::string>> component_names;
  AddFlavor flavor = AddFlavor::LeftZero;
};

std::vector<std::string> lattice_names_for(LatticeKind kind, std::size_t param) {
  if (kind != LatticeKind::Divisor) return io::index_names(make_lattice(kind, param).size());
  std::vector<std::string> names;
  for (auto d : divisors(param)) names.push_back(std::to_string(d));
  return names;
}

LoadedFamily load_family(const io::Structure& s) {
  if (const auto* f = std::get_if<io::FamilyFile>(&s)) {
    LoadedFamily lf{io::to_family(*f), f->lattice.names, {}, AddFlavor::LeftZero};
    for (const auto& c : f->components) lf.component_names.push_back(c.names);
    return lf;
  }
  if (const auto* spec = std::get_if<io::InstanceSpecFile>(&s)) {
    return {make_instance(spec->spec),
            lattice_names_for(spec->spec.lattice, spec->spec.lattice_param),
            {},
            spec->spec.flavor};
  }
  throw std::invalid_argument(std::string("expected an iso-family or instance-spec file, got ") +
                              io::kind_tag(s));
}

io::FamilyFile family_file(const InstanceSpec& spec) {
  return io::to_file(make_instance(spec), lattice_names_for(spec.lattice, spec.lattice_param));
}

// --- gen -----------------------------------------------------------------

InstanceSpec parse_spec_flags(const std::string& lattice, const std::string& group,
                              const std::string& recipe, AddFlavor flavor) {
  InstanceSpec spec;
  auto split = [](const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) return std::pair<std::string, std::string>{s, ""};
    return std::pair<std::string, std::string>{s.substr(0, colon), s.substr(colon + 1)};
  };
  auto number = [](const std::string& s, const std::string& what) {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "expected a number, got '" + s + "'");
    }
  };
  const auto [lk, lp] = split(lattice);
  if (lk == "chain") spec.lattice = LatticeKind::Chain;
  else if (lk == "boolean") spec.lattice = LatticeKind::Boolean;
  else if (lk == "divisor") spec.lattice = LatticeKind::Divisor;
  else throw CLI::ValidationError("--lattice", "unknown lattice '" + lk + "'");
  spec.lattice_param = number(lp, "--lattice");

  const auto [gk, gp] = split(group);
  if (gk == "cyclic") {
    spec.group = GroupKind::Cyclic;
    spec.group_param = number(gp, "--group");
  } else if (gk == "klein") {
    spec.group = GroupKind::Klein;
    spec.group_param = 4;
  } else if (gk == "s3") {
    spec.group = GroupKind::Symmetric3;
    spec.group_param = 6;
  } else {
    throw CLI::ValidationError("--group", "unknown group '" + gk + "'");
  }
  spec.recipe = recipe == "twisted" ? Recipe::Twisted : Recipe::Identity;
  spec.flavor = flavor;
  return spec;
}

int cmd_gen(const std::string& target, const std::string& lattice, const std::string& group,
            const std::string& recipe, const Options& o, std::ostream& out) {
  const AddFlavor flavor = flavor_or(o, AddFlavor::LeftZero);
  if (target == "corpus") {
    if (o.out.empty()) throw CLI::ValidationError("--out", "gen corpus needs an output directory");
    std::filesystem::create_directories(o.out);
    for (const auto& spec : acceptance_corpus()) {
      const auto path = std::filesystem::path(o.out) / (spec.name() + ".family");
      io::write_file(path.string(), io::serialize(family_file(spec)));
      out << path.string() << '\n';
    }
    return kOk;
  }
  if (target == "family" || target == "spec") {
    const auto spec = parse_spec_flags(lattice, group, recipe, flavor);
    if (target == "spec") emit(o, out, io::serialize(io::InstanceSpecFile{spec}));
    else emit(o, out, io::serialize(family_file(spec)));
    return kOk;
  }
  if (target == "counterexample") {
    emit(o, out, io::serialize(io::to_file(non_strong_counterexample())));
    return kOk;
  }
  if (target == "sdl2-violation") {
    emit(o, out, io::serialize(io::to_file(sdl2_violating_family())));
    return kOk;
  }
  if (target == "m3") {
    auto [join, meet] = diamond_m3_tables();
    emit(o, out, io::serialize(io::LatticeFile{io::index_names(5), join, meet}));
    return kOk;
  }
  throw CLI::ValidationError("target", "unknown gen target '" + target + "'");
}

// --- build ---------------------------------------------------------------

int cmd_build(const std::string& path, const Options& o, std::ostream& out) {
  const auto loaded = load_family(load(path));
  const AddFlavor flavor = flavor_or(o, loaded.flavor);
  const SemiringTable s =
      build_strong_sdl(loaded.instance.family, loaded.instance.phi, {!o.no_self_check, flavor});
  emit(o, out, io::serialize(io::to_file(s, loaded.lattice_names, loaded.component_names)));
  return kOk;
}

// --- check ---------------------------------------------------------------

int check_family(const LoadedFamily& lf, Report& r) {
  const auto& fam = lf.instance.family;
  const auto& names = lf.lattice_names;
  const auto report = validate_iso_family(fam, lf.instance.phi);
  r.add("iso_family", "connecting family valid", yes_no(report.ok()));
  if (!report.ok()) {
    std::ostringstream os;
    for (std::size_t i = 0; i < report.violations.size(); ++i) {
      const auto& v = report.violations[i];
      if (i) os << "; ";
      std::string where = join_names(v.where, names);
      std::replace(where.begin(), where.end(), ' ', ',');
      os << to_string(v.kind) << " at (" << where << ")";
      if (v.element) os << " element " << *v.element;
    }
    r.add("iso_family.violations", "violations", os.str());
    return kCheckFailed;
  }
  const IsoFamily psi = derive_psi(lf.instance.phi);
  const auto psi_ok = check_psi_family(fam.lattice(), psi);
  const auto clause_iii = check_clause_iii(fam.lattice(), lf.instance.phi, psi);
  const auto compat = check_compatibility(fam.lattice(), lf.instance.phi, psi);
  add_verdict(r, "psi_family", "derived psi family valid", psi_ok, names);
  add_verdict(r, "clause_iii", "clause (iii)", clause_iii, names);
  add_verdict(r, "compatibility", "compatibility", compat, names);
  return psi_ok && clause_iii && compat ? kOk : kCheckFailed;
}

int cmd_check(const std::string& path, const Options& o, std::ostream& out) {
  const io::Structure s = load(path);
  Report r;
  r.add("kind", "kind", io::kind_tag(s));
  int code = kOk;
  if (const auto* f = std::get_if<io::SemigroupFile>(&s)) {
    const auto v = check_associative(f->op);
    add_verdict(r, "associative", "associative", v, f->names);
    code = v ? kOk : kCheckFailed;
  } else if (const auto* f = std::get_if<io::GroupFile>(&s)) {
    const auto g = check_group(f->op);
    add_verdict(r, "group", "group", g.verdict, f->names);
    if (g.group) {
      r.add("group.identity", "identity", f->names[g.group->identity()]);
      r.add("group.order", "order", std::to_string(g.group->order()));
    }
    code = g.group ? kOk : kCheckFailed;
  } else if (const auto* f = std::get_if<io::LatticeFile>(&s)) {
    const auto v = check_distributive_lattice(f->join, f->meet);
    add_verdict(r, "distributive_lattice", "distributive lattice", v, f->names);
    code = v ? kOk : kCheckFailed;
  } else if (const auto* f = std::get_if<io::SemiringFile>(&s)) {
    const auto v = check_semiring(f->add, f->mul);
    add_verdict(r, "semiring", "semiring", v, f->names);
    code = v ? kOk : kCheckFailed;
  } else {
    std::optional<LoadedFamily> lf;
    try {
      lf = load_family(s);
    } catch (const std::invalid_argument& e) {
      r.add("valid", "valid", "no");
      r.add("valid.reason", "reason", e.what());
      r.print(out, format_of(o));
      return kCheckFailed;
    }
    code = check_family(*lf, r);
  }
  r.print(out, format_of(o));
  return code;
}

// --- analyze -------------------------------------------------------------

int cmd_analyze(const std::string& path, const Options& o, std::ostream& out) {
  const io::Structure s = load(path);
  const auto* f = std::get_if<io::SemiringFile>(&s);
  if (!f)
    throw std::invalid_argument(std::string("analyze needs a semiring file, got ") +
                                io::kind_tag(s));
  const AddFlavor flavor = flavor_or(o, AddFlavor::LeftZero);
  const AnalysisReport a = full_analysis(f->add, f->mul, flavor);
  const auto& names = f->names;
  const std::string skipped = "not evaluated";

  Report r;
  r.add("flavor", "flavor", to_string(flavor));
  r.add("size", "size", std::to_string(f->add.size()));
  add_verdict(r, "semiring", "semiring", a.is_semiring, names);
  if (a.idempotents) {
    r.add("idempotents.count", "|E(S)|", std::to_string(a.idempotents->size()));
    r.add("idempotents", "E(S)", join_names(*a.idempotents, names));
  } else {
    r.add("idempotents.count", "|E(S)|", skipped);
  }
  const std::string band_label =
      flavor == AddFlavor::LeftZero ? "(S,+) left normal band" : "(S,+) right normal band";
  if (a.is_normal_band_add) add_verdict(r, "normal_band", band_label, *a.is_normal_band_add, names);
  else r.add("normal_band", band_label, skipped);
  if (a.is_plain_normal_band_add)
    add_verdict(r, "normal_band.plain", "(S,+) normal band", *a.is_plain_normal_band_add, names);
  else r.add("normal_band.plain", "(S,+) normal band", skipped);
  if (a.is_clifford_mul) add_verdict(r, "clifford", "(S,.) Clifford", *a.is_clifford_mul, names);
  else r.add("clifford", "(S,.) Clifford", skipped);

  if (a.components) {
    std::string orders;
    for (std::size_t i = 0; i < a.components->members.size(); ++i)
      orders += (i ? " " : "") + std::to_string(a.components->members[i].size());
    r.add("components.count", "components", std::to_string(a.components->members.size()));
    r.add("components.orders", "component orders", orders);
  } else {
    r.add("components.count", "components", skipped);
  }
  if (a.idempotent_lattice) {
    add_verdict(r, "e_lattice", "E(S) distributive lattice", a.idempotent_lattice->verdict, names);
  } else {
    r.add("e_lattice", "E(S) distributive lattice", skipped);
  }
  if (a.component_closure)
    add_verdict(r, "component_closure", "component closure", *a.component_closure, names);
  else r.add("component_closure", "component closure", skipped);

  if (a.is_strong_sdl_of_group_semirings) {
    r.add("strong_sdl", "strong SDL", yes_no(*a.is_strong_sdl_of_group_semirings));
    if (!*a.is_strong_sdl_of_group_semirings) r.add("strong_sdl.reason", "strong SDL failure",
                                                     a.recovery->verdict.reason);
  } else {
    r.add("strong_sdl", "strong SDL", skipped);
  }
  r.print(out, format_of(o));
  return a.is_strong_sdl_of_group_semirings.value_or(false) ? kOk : kCheckFailed;
}

// --- roundtrip -----------------------------------------------------------

int cmd_roundtrip(const std::string& path, const Options& o, std::ostream& out) {
  const auto loaded = load_family(load(path));
  const AddFlavor flavor = flavor_or(o, loaded.flavor);
  const Verdict v = verify_round_trip(loaded.instance.family, loaded.instance.phi, flavor);
  Report r;
  r.add("flavor", "flavor", to_string(flavor));
  r.add("size", "size", std::to_string(loaded.instance.family.total_order()));
  add_verdict(r, "roundtrip", "round trip", v, loaded.lattice_names);
  r.print(out, format_of(o));
  return v ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong distributive lattices of group semirings: build, check, analyze"};
  app.name("sdlkit");
  app.require_subcommand(1);

  Options o;
  std::string file, target = "family", lattice = "chain:2", group = "cyclic:2",
                    recipe = "identity";

  auto common = [&](CLI::App* sub, bool with_format) {
    if (with_format)
      sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "kv"}));
    sub->add_option("--flavor", o.flavor, "Addition convention")
        ->check(CLI::IsMember({"left", "right"}));
  };

  auto* gen = app.add_subcommand("gen", "Write generated structures");
  gen->add_option("target", target, "family | spec | corpus | counterexample | sdl2-violation | m3")
      ->check(CLI::IsMember({"family", "spec", "corpus", "counterexample", "sdl2-violation", "m3"}));
  gen->add_option("--lattice", lattice, "chain:N | boolean:K | divisor:N");
  gen->add_option("--group", group, "cyclic:N | klein | s3");
  gen->add_option("--recipe", recipe, "identity | twisted")
      ->check(CLI::IsMember({"identity", "twisted"}));
  gen->add_option("--out", o.out, "Output file (directory for corpus)");
  common(gen, false);

  auto* build = app.add_subcommand("build", "Construct the semiring of a family");
  build->add_option("file", file, "iso-family or instance-spec file")->required();
  build->add_option("--out", o.out, "Output file");
  build->add_flag("--no-self-check", o.no_self_check, "Skip verifying the output (benchmarks)");
  common(build, false);

  auto* check = app.add_subcommand("check", "Check the axioms of a structure file");
  check->add_option("file", file, "Structure file")->required();
  common(check, true);

  auto* analyze = app.add_subcommand("analyze", "Decompose and classify a semiring");
  analyze->add_option("file", file, "Semiring file")->required();
  common(analyze, true);

  auto* roundtrip = app.add_subcommand("roundtrip", "Build, analyze and compare with the input");
  roundtrip->add_option("file", file, "iso-family or instance-spec file")->required();
  common(roundtrip, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "sdlkit: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(target, lattice, group, recipe, o, out);
    if (build->parsed()) return cmd_build(file, o, out);
    if (check->parsed()) return cmd_check(file, o, out);
    if (analyze->parsed()) return cmd_analyze(file, o, out);
    if (roundtrip->parsed()) return cmd_roundtrip(file, o, out);
  } catch (const CLI::ValidationError& e) {
    err << "sdlkit: " << e.what() << '\n';
    return kUsage;
  } catch (const io::IoError& e) {
    err << "sdlkit: " << e.what() << '\n';
    return kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "sdlkit: " << e.what() << '\n';
    return kIoError;
  } catch (const io::ParseError& e) {
    err << "sdlkit: " << file << ": " << e.what() << '\n';
    return kParseError;
  } catch (const BuildError& e) {
    err << "sdlkit: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "sdlkit: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "sdlkit: internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsage;
}

}  // namespace sdlkit::cli
