#include "rspin/report.hpp"

#include <sstream>

#include "rspin/expression.hpp"
#include "rspin/topology.hpp"
#include "rspin/twists.hpp"

namespace rspin::report {

using abelian::FgAbGroup;
using classes::FormalClass;
using classes::ModuliContext;

namespace {

json str(const Int& v) { return v.get_str(); }

json group_json(const FgAbGroup& g) {
  json factors = json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(str(d));
  return {{"free_rank", std::to_string(g.free_rank())},
          {"invariant_factors", factors},
          {"text", g.to_string()}};
}

json presentation_json(const classes::Presentation& p, const Int& r) {
  json gens = json::array();
  for (const auto& g : p.generators) gens.push_back(expression::format_class(g, r));
  json rows = json::array();
  for (std::size_t i = 0; i < p.relations.rows(); ++i) {
    json row = json::array();
    for (const auto& c : p.relations.row(i)) row.push_back(str(c));
    rows.push_back(row);
  }
  return {{"generators", gens},
          {"relations", rows},
          {"text", expression::format_presentation(p, r)}};
}

void add_diagnostic(json& report, const std::string& level, const std::string& message) {
  report["diagnostics"].push_back({{"level", level}, {"message", message}});
}

json context_json(const ModuliContext& ctx) {
  json c;
  c["r"] = str(ctx.r());
  c["g"] = str(ctx.g());
  c["eps"] = ctx.eps() ? json(std::to_string(*ctx.eps())) : json(nullptr);
  c["chi"] = str(ctx.chi());
  c["u_r"] = str(ctx.u_r());
  c["torsion_order"] = str(ctx.torsion_order());
  c["nonempty"] = ctx.nonempty();
  c["structure_count"] = str(topology::spin_structure_count(ctx.r(), ctx.g()));
  c["orbits"] = str(topology::orbit_count(ctx.r()));
  c["stable_range"] = {{"h1", ctx.h1_in_range()}, {"h2", ctx.h2_in_range()}};
  // Largest degree with 5 * deg <= 2g - 7.
  const Int top = 2 * ctx.g() - 7;
  c["rational_stable_degree"] = top < 0 ? json(nullptr) : str(floor_div(top, 5));
  c["verified"] = ctx.h2_in_range();
  return c;
}

json base(const std::string& command, json context) {
  json j;
  j["command"] = command;
  j["context"] = std::move(context);
  j["groups"] = nullptr;
  j["presentation"] = nullptr;
  j["diagnostics"] = json::array();
  return j;
}

void note_unverified(json& j, const ModuliContext& ctx) {
  if (ctx.h2_in_range()) return;
  add_diagnostic(j, "warning",
                 "UNVERIFIED (below stable range): g = " + ctx.g().get_str() +
                     " < " + std::to_string(classes::kH2StableGenus) +
                     "; values are the stable closed forms");
}

std::string order_text(const Int& tau) {
  return abelian::element_order(24, tau).get_str();
}

json theta_json(json& j, const ModuliContext& ctx, const std::vector<FormalClass>& gens) {
  json theta;
  const Int& r = ctx.r();
  const auto closed = twists::tors_map_image_closed_form(ctx);
  const auto direct = twists::tors_map_image_direct(ctx);
  theta["tors_map_image"] = {{"modulus", str(r)},
                             {"generator", str(closed.generator())},
                             {"order", str(closed.order())},
                             {"direct_generator", str(direct.generator())},
                             {"direct_order", str(direct.order())}};
  theta["h1"] = nullptr;
  theta["h2"] = nullptr;
  theta["subgroup"] = nullptr;
  if (!(closed == direct)) {
    add_diagnostic(j, "inconsistency",
                   "closed-form image of the torsion map (order " + closed.order().get_str() +
                       ") differs from the image of the torsion generator (order " +
                       direct.order().get_str() + ")");
    return theta;
  }
  const FgAbGroup h1 = twists::h1_theta(ctx);
  const FgAbGroup h2 = FgAbGroup::from_cyclic_orders(1, {h1.torsion_order()});
  theta["h1"] = group_json(h1);
  theta["h2"] = group_json(h2);
  if (twists::contradicts_blanket_r4_example(ctx)) {
    add_diagnostic(j, "warning",
                   "for r = 4, eps = 0 the torsion map image is nontrivial at g = " +
                       ctx.g().get_str() + ", so H1(M~) is " + h1.to_string() +
                       " rather than Z/8 (the value usually quoted for g >= 9)");
  }
  try {
    const auto sub = twists::h2_theta_subgroup(ctx, gens);
    json subgroup = presentation_json(sub.presentation, r);
    subgroup["index"] = str(sub.index);
    subgroup["fiber_image_order"] = str(sub.fiber_image.order());
    const FgAbGroup abstract =
        abelian::group_from_presentation(sub.presentation.generators.size(),
                                         sub.presentation.relations);
    subgroup["structure"] = group_json(abstract);
    if (abstract != h2) {
      add_diagnostic(j, "inconsistency",
                     "H2(M~) computed as a subgroup is " + abstract.to_string() +
                         " but Z ⊕ H1(M~) is " + h2.to_string());
    }
    theta["subgroup"] = subgroup;
  } catch (const ConsistencyError& e) {
    add_diagnostic(j, "inconsistency", e.what());
  }
  return theta;
}

}  // namespace

ModuliContext make_context(const Query& q) {
  return ModuliContext(q.r, q.g, q.eps,
                       q.force ? classes::RangePolicy::override_unverified
                               : classes::RangePolicy::enforce);
}

json build_report(const Query& q) {
  const ModuliContext ctx = make_context(q);
  ctx.require_h2_range();
  ctx.require_h1_range();
  const Int& r = ctx.r();
  json j = base("report", context_json(ctx));
  note_unverified(j, ctx);

  std::vector<FormalClass> table{FormalClass::lambda(r), FormalClass::lambda(1),
                                 FormalClass::kappa1(r), FormalClass::kappa1(1)};
  if (ctx.r_even()) table.push_back(FormalClass::mu());
  json divisibility = json::array();
  for (const auto& x : table) {
    divisibility.push_back({{"class", expression::format_class(x, r)},
                            {"d", str(classes::free_coordinate(ctx, x))},
                            {"phi", str(classes::phi_value(ctx, x))}});
  }
  j["classes"] = {{"divisibility", divisibility}, {"torsion_generator", nullptr}};

  if (!ctx.nonempty()) {
    add_diagnostic(j, "note",
                   "no r-Spin structures: r = " + r.get_str() + " does not divide chi = " +
                       ctx.chi().get_str() + "; group data omitted");
    return j;
  }

  const FgAbGroup h1 = topology::h1_moduli(ctx);
  const FgAbGroup h2 = topology::h2_moduli(ctx);
  j["groups"] = {{"h1", group_json(h1)},
                 {"h2", group_json(h2)},
                 {"picard", group_json(h2)},
                 {"torsion", group_json(h2.torsion())}};
  if (ctx.torsion_order() > 1) {
    const FormalClass t = classes::torsion_generator(ctx);
    const Int phi = classes::phi_value(ctx, t);
    j["classes"]["torsion_generator"] = {{"class", expression::format_class(t, r)},
                                         {"phi", str(phi)},
                                         {"order", order_text(phi)}};
  }
  const auto gens = classes::preferred_generators(ctx);
  j["presentation"] = presentation_json(classes::presentation(ctx, gens), r);
  j["theta"] = theta_json(j, ctx, gens);
  return j;
}

json build_eval(const Query& q, const std::string& text) {
  const ModuliContext ctx = make_context(q);
  ctx.require_h2_range();
  ctx.require_nonempty();
  const Int& r = ctx.r();
  const FormalClass x = expression::parse(text, r);
  json j = base("eval", context_json(ctx));
  note_unverified(j, ctx);

  const auto coords = classes::canonical_coords(ctx, x);
  const Int phi = classes::phi_value(ctx, x);
  j["groups"] = {{"h2", group_json(topology::h2_moduli(ctx))}};
  j["expression"] = {{"input", text}, {"normalized", expression::format_class(x, r)}};
  j["coordinates"] = {{"d", str(coords.d)}, {"tau", str(coords.tau)}};
  j["phi"] = str(phi);
  j["rational_multiple_of_lambda"] = to_string(classes::rational_multiple_of_lambda(ctx, x));
  const bool torsion = coords.d == 0;
  j["diagnosis"] = {{"torsion", torsion},
                    {"zero", torsion && coords.tau == 0},
                    {"order", torsion ? json(order_text(coords.tau)) : json("infinite")}};
  return j;
}

json build_theta(const Query& q) {
  const ModuliContext ctx = make_context(q);
  ctx.require_h2_range();
  ctx.require_nonempty();
  json j = base("theta", context_json(ctx));
  note_unverified(j, ctx);
  const auto gens = classes::preferred_generators(ctx);
  j["groups"] = {{"h2", group_json(topology::h2_moduli(ctx))}};
  j["theta"] = theta_json(j, ctx, gens);
  if (!j["theta"]["subgroup"].is_null()) j["presentation"] = j["theta"]["subgroup"];
  return j;
}

json build_twist(const Query& q, std::optional<int> arf, const Int& beta,
                 const std::string& text) {
  const ModuliContext ctx = make_context(q);
  const Int& r = ctx.r();
  if (!ctx.r_even() && arf)
    throw InvalidInput("--arf is only meaningful when r is even (r = " + r.get_str() + ")");
  if (ctx.r_even() && !arf) arf = ctx.eps();
  ctx.require_nonempty();
  const FormalClass x = expression::parse(text, r);
  const twists::TwistInput input{ctx, arf, beta};

  json j = base("twist", context_json(ctx));
  json terms = json::array();
  for (const auto& [s, c] : x.terms()) {
    const Int unit = twists::twist_shift(input, s);
    terms.push_back({{"class", expression::format_symbol(s, r)},
                     {"coefficient", str(c)},
                     {"unit_shift", str(unit)},
                     {"shift", str(mod(c * unit, r))}});
  }
  j["twist"] = {{"expression", expression::format_class(x, r)},
                {"arf", arf ? json(std::to_string(*arf)) : json(nullptr)},
                {"beta", str(mod(beta, r))},
                {"modulus", str(r)},
                {"terms", terms},
                {"total", str(twists::twist_shift(input, x))}};
  return j;
}

json build_table(const Int& r_min, const Int& r_max) {
  if (r_min < 2) throw InvalidInput("--r-min must be at least 2");
  if (r_max - r_min > 100000) throw InvalidInput("table range is limited to 100000 rows");
  json j = base("table", {{"r_min", str(r_min)}, {"r_max", str(r_max)}});
  json rows = json::array();
  for (Int r = r_min; r <= r_max; ++r) {
    const auto pi0 = topology::pi0_mtspin(r);
    rows.push_back({{"r", str(r)},
                    {"u_r", str(classes::u_r(r))},
                    {"torsion", group_json(topology::pi1_mtspin(r))},
                    {"pi2_multiplier", str(topology::pi2_multiplier(r))},
                    {"pi0", {{"group", group_json(pi0.group)},
                             {"euler_image_index", str(pi0.euler_image_index)}}}});
  }
  j["rows"] = rows;
  return j;
}

ExitCode exit_code_of(const json& report) {
  for (const auto& d : report.at("diagnostics"))
    if (d.at("level") == "inconsistency") return ExitCode::consistency;
  return ExitCode::ok;
}

// ---------------------------------------------------------------------------
// Text rendering

namespace {

class Writer {
 public:
  explicit Writer(bool color) : color_(color) {}

  void heading(const std::string& s) {
    os_ << (color_ ? "\x1b[1m" + s + "\x1b[0m" : s) << '\n';
  }
  void line(const std::string& s) { os_ << s << '\n'; }
  void field(const std::string& key, const std::string& value) {
    os_ << "  " << key << ": " << value << '\n';
  }
  std::string str() const { return os_.str(); }

 private:
  bool color_;
  std::ostringstream os_;
};

std::string s(const json& v) { return v.is_null() ? "-" : v.get<std::string>(); }

std::string group_text(const json& g) { return g.is_null() ? "-" : s(g.at("text")); }

std::string torsion_text(const json& g) {
  return g.at("text") == "0" ? "trivial" : s(g.at("text"));
}

std::string yes_no(const json& b) { return b.get<bool>() ? "yes" : "no"; }

std::string pad(std::string v, std::size_t width) {
  // Column widths count code points so that "⊕" lines up.
  std::size_t n = 0;
  for (unsigned char c : v)
    if ((c & 0xC0) != 0x80) ++n;
  if (n < width) v.append(width - n, ' ');
  return v;
}

void render_context(Writer& w, const json& c) {
  std::string title = "r-Spin moduli space  r=" + s(c["r"]) + ", g=" + s(c["g"]);
  if (!c["eps"].is_null()) title += ", eps=" + s(c["eps"]);
  w.heading(title);
  w.field("chi", s(c["chi"]));
  w.field("U_r", s(c["u_r"]));
  w.field("torsion order N", s(c["torsion_order"]));
  w.field("nonempty", yes_no(c["nonempty"]) + " (" + s(c["structure_count"]) +
                          " r-Spin structures, " + s(c["orbits"]) + " orbit(s))");
  w.field("stable range", "H1 (g >= 6) " + yes_no(c["stable_range"]["h1"]) +
                              ", H2 (g >= 9) " + yes_no(c["stable_range"]["h2"]));
}

void render_diagnostics(Writer& w, const json& j) {
  for (const auto& d : j["diagnostics"]) w.line(s(d["level"]) + ": " + s(d["message"]));
}

void render_theta_section(Writer& w, const json& t, const std::string& title) {
  w.heading(title);
  const json& im = t["tors_map_image"];
  w.field("torsion map image in Z/" + s(im["modulus"]),
          "generated by " + s(im["generator"]) + ", order " + s(im["order"]));
  w.field("H1(M~)", group_text(t["h1"]));
  w.field("H2(M~)", group_text(t["h2"]));
  if (t["subgroup"].is_null()) return;
  const json& sub = t["subgroup"];
  std::string gens;
  for (std::size_t i = 0; i < sub["generators"].size(); ++i) {
    if (i) gens += ", ";
    gens += s(sub["generators"][i]);
  }
  w.field("H2(M~) inside H2(M)", s(sub["text"]));
  w.field("summary", "H1 = " + group_text(t["h1"]) + "; index " + s(sub["index"]) +
                         "; generators " + gens);
}

std::string render_report(const json& j, bool color) {
  Writer w(color);
  const json& c = j["context"];
  if (!c["verified"].get<bool>()) w.line("UNVERIFIED (below stable range)");
  render_context(w, c);
  if (!c["rational_stable_degree"].is_null())
    w.field("rational cohomology", "Q[kappa_1, kappa_2, ...] in degrees 2*i with 5*i <= 2g - 7 (i <= " +
                                       s(c["rational_stable_degree"]) + ")");
  if (!j["groups"].is_null()) {
    const json& g = j["groups"];
    w.heading("groups");
    w.field("H1", group_text(g["h1"]));
    w.field("H2", group_text(g["h2"]));
    w.field("Picard", "Pic ≅ " + group_text(g["picard"]) +
                          " (Pic_alg -> Pic_hol -> NS -> H2 composite is an isomorphism)");
    w.field("torsion", torsion_text(g["torsion"]));
  }
  w.heading("divisibility in the torsion-free quotient (x = d*g)");
  for (const auto& row : j["classes"]["divisibility"])
    w.line("  " + pad(s(row["class"]), 14) + "d = " + pad(s(row["d"]), 8) + "phi = " +
           s(row["phi"]));
  const json& t = j["classes"]["torsion_generator"];
  if (!t.is_null())
    w.line("torsion generator: " + s(t["class"]) + " (phi = " + s(t["phi"]) + ", order " +
           s(t["order"]) + ")");
  if (!j["presentation"].is_null())
    w.line("presentation: " + s(j["presentation"]["text"]));
  if (j.contains("theta")) render_theta_section(w, j["theta"], "theta-characteristics M~");
  render_diagnostics(w, j);
  return w.str();
}

std::string render_eval(const json& j, bool color) {
  Writer w(color);
  const json& c = j["context"];
  if (!c["verified"].get<bool>()) w.line("UNVERIFIED (below stable range)");
  std::string title = "class " + s(j["expression"]["normalized"]) + "  (r=" + s(c["r"]) +
                      ", g=" + s(c["g"]);
  if (!c["eps"].is_null()) title += ", eps=" + s(c["eps"]);
  w.heading(title + ")");
  w.line("  d = " + s(j["coordinates"]["d"]) + ", tau = " + s(j["coordinates"]["tau"]));
  w.line("  phi = " + s(j["phi"]) + " mod 24");
  w.field("rational multiple of lambda", s(j["rational_multiple_of_lambda"]));
  const json& d = j["diagnosis"];
  std::string diagnosis;
  if (d["zero"].get<bool>()) {
    diagnosis = "zero class (order 1)";
  } else if (d["torsion"].get<bool>()) {
    diagnosis = "torsion, order " + s(d["order"]);
  } else {
    diagnosis = "infinite order, " + s(j["coordinates"]["d"]) + " times the generator modulo torsion";
  }
  w.field("diagnosis", diagnosis);
  render_diagnostics(w, j);
  return w.str();
}

std::string render_theta(const json& j, bool color) {
  Writer w(color);
  const json& c = j["context"];
  if (!c["verified"].get<bool>()) w.line("UNVERIFIED (below stable range)");
  render_context(w, c);
  w.field("H2(M)", group_text(j["groups"]["h2"]));
  render_theta_section(w, j["theta"], "theta-characteristics M~");
  render_diagnostics(w, j);
  return w.str();
}

std::string render_twist(const json& j, bool color) {
  Writer w(color);
  const json& t = j["twist"];
  std::string title = "twist of " + s(t["expression"]) + " by D with beta coefficient " +
                      s(t["beta"]);
  if (!t["arf"].is_null()) title += ", Arf " + s(t["arf"]);
  w.heading(title);
  for (const auto& term : t["terms"])
    w.line("  " + pad(s(term["class"]), 14) + "x " + pad(s(term["coefficient"]), 6) +
           "shift " + s(term["shift"]) + " mod " + s(t["modulus"]));
  w.line("total shift: " + s(t["total"]) + " mod " + s(t["modulus"]));
  render_diagnostics(w, j);
  return w.str();
}

std::string render_table(const json& j, bool color) {
  Writer w(color);
  w.heading(pad("r", 6) + pad("U_r", 6) + pad("torsion", 10) + pad("pi2", 8) + "pi0");
  for (const auto& row : j["rows"])
    w.line(pad(s(row["r"]), 6) + pad(s(row["u_r"]), 6) + pad(torsion_text(row["torsion"]), 10) +
           pad(s(row["pi2_multiplier"]), 8) + group_text(row["pi0"]["group"]) +
           " (euler image " + s(row["pi0"]["euler_image_index"]) + "Z)");
  render_diagnostics(w, j);
  return w.str();
}

}  // namespace

std::string render_text(const json& report, bool color) {
  const std::string command = report.at("command");
  if (command == "report") return render_report(report, color);
  if (command == "eval") return render_eval(report, color);
  if (command == "theta") return render_theta(report, color);
  if (command == "twist") return render_twist(report, color);
  if (command == "table") return render_table(report, color);
  throw InvalidInput("unknown report type '" + command + "'");
}

}  // namespace rspin::report
