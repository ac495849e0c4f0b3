#include "cli.hpp"

#include <bsfan/division.hpp>
#include <bsfan/errors.hpp>
#include <bsfan/expr.hpp>
#include <bsfan/io.hpp>
#include <bsfan/malgrange.hpp>
#include <bsfan/sabbah.hpp>
#include <bsfan/standard_basis.hpp>
#include <bsfan/vfan.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace bsfan::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Inputs {
  std::vector<std::string> functions;
  std::vector<std::string> generators;
};

struct Report {
  std::string text;
  int code = kOk;
};

// "1,0" -> {1, 0}; rejects anything but comma-separated integers.
std::vector<std::int64_t> parse_ints(const std::string& s) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find(',', pos), s.size());
    const std::string item = s.substr(pos, end - pos);
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      throw ParseError("expected an integer in '" + s + "'", pos);
    }
    if (used != item.size()) throw ParseError("expected an integer in '" + s + "'", pos + used);
    pos = end + 1;
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t end = std::min(s.find(',', pos), s.size());
    try {
      out.push_back(parse_rational(s.substr(pos, end - pos)));
    } catch (const ParseError& e) {
      throw ParseError("bad weight list '" + s + "'", pos + e.position());
    }
    pos = end + 1;
  }
  return out;
}

LinearForm v_form_of(int n, int p, const std::string& s) {
  const auto l = parse_rationals(s);
  if (l.size() != static_cast<std::size_t>(p))
    throw InvalidArgument("weight list '" + s + "' must have " + std::to_string(p) + " entries");
  return LinearForm::v_form(n, l);
}

OrderDescriptor parse_order(const std::string& text, int n, int p) {
  if (text == "base0") return OrderDescriptor::base0(n, p);
  if (text == "deg") return OrderDescriptor::degree_first(n, p);
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("unknown order '" + text + "'", 0);
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (kind == "V") return OrderDescriptor::l_order(v_form_of(n, p, rest));
  if (kind == "Vh") return OrderDescriptor::lh_order(v_form_of(n, p, rest));
  if (kind == "tri") {
    const auto at = rest.find('@');
    if (at == std::string::npos) throw ParseError("tri order needs 'L@Lsigma'", colon + 1);
    return OrderDescriptor::tri(v_form_of(n, p, rest.substr(0, at)), v_form_of(n, p, rest.substr(at + 1)));
  }
  throw ParseError("unknown order kind '" + kind + "'", 0);
}

SlopeDirection parse_direction(const std::string& s) {
  const auto v = parse_ints(s);
  if (v.size() == 1) return {v[0], 0};
  if (v.size() != 2) throw InvalidArgument("a direction has one or two entries");
  return {v[0], v[1]};
}

Json ray_json(const SlopeDirection& d) { return Json::array({d.a(), d.b()}); }

std::string ord_text(const OrderValue& v) { return v ? to_string(*v) : "-inf"; }

std::string cone_text(const Cone2& c) {
  if (c.is_ray()) return "ray " + c.lower.to_string();
  return std::string(c.lower_closed ? "[" : "(") + c.lower.to_string() + "," + c.upper.to_string() +
         (c.upper_closed ? "]" : ")");
}

class Session {
 public:
  Session(SessionConfig cfg, Inputs in) : cfg_(std::move(cfg)), in_(std::move(in)) {}

  int p() const { return cfg_.p.value_or(1); }

  RingSignature signature() const { return RingSignature::make(cfg_.n, p(), cfg_.ring); }

  /// Resolves -p against -f and validates the signature.
  void settle() {
    if (!in_.functions.empty()) {
      const int fp = static_cast<int>(in_.functions.size());
      if (cfg_.p && *cfg_.p != fp)
        throw InvalidArgument("-p " + std::to_string(*cfg_.p) + " does not match " + std::to_string(fp) +
                              " functions");
      cfg_.p = fp;
      if (!in_.generators.empty()) throw InvalidArgument("give either -f or -g, not both");
      if (cfg_.ring != Ring::weyl) throw InvalidArgument("-f builds an ideal of the Weyl ring; drop --ring dz");
    }
    if (cfg_.n < 1 || p() < 1) throw InvalidArgument("n and p must be positive");
    if (cfg_.budget.division_steps == 0 || cfg_.budget.completion_steps == 0 ||
        cfg_.budget.lowering_iterations == 0)
      throw InvalidArgument("budgets must be positive");
  }

  bool has_ideal() const { return !in_.functions.empty() || !in_.generators.empty(); }

  DOp op(const std::string& text) const { return parse_operator(text, signature()); }

  /// Generators as typed, in the session ring.
  IdealPresentation presentation() const {
    if (!in_.functions.empty()) {
      MalgrangeInput mi;
      mi.n = cfg_.n;
      const auto names = x_names(cfg_.n);
      for (const auto& f : in_.functions) mi.f.push_back(parse_polynomial(f, names));
      mi.v.assign(mi.f.size(), 0);
      return malgrange_ideal(mi);
    }
    if (in_.generators.empty()) throw InvalidArgument("no ideal given; use -f or -g");
    IdealPresentation ip;
    ip.homogenized = cfg_.ring == Ring::homogenized;
    for (const auto& g : in_.generators) ip.generators.push_back(op(g));
    if (ip.homogenized)
      for (const auto& g : ip.generators)
        if (!g.is_homogeneous()) throw PreconditionViolated("generators in D<z> must be homogeneous");
    return ip;
  }

  /// Presentation of h(I) (or the typed homogeneous presentation in D<z>).
  IdealPresentation homogeneous() const {
    auto ip = presentation();
    if (ip.homogenized) return ip;
    return homogenize_ideal(ip.generators, cfg_.budget);
  }

  /// Weyl generators of I for the module M = D/I.
  IdealPresentation weyl() const {
    auto ip = presentation();
    if (ip.homogenized)
      for (auto& g : ip.generators) g = specialize_z1(g);
    ip.homogenized = false;
    return ip;
  }

  OrderDescriptor order(const char* fallback) const {
    return parse_order(cfg_.order.value_or(fallback), cfg_.n, p());
  }

  std::string fmt(const DOp& q, const std::optional<OrderDescriptor>& ord = std::nullopt) const {
    return format_operator(q, ord);
  }

  const SessionConfig& config() const { return cfg_; }

 private:
  SessionConfig cfg_;
  Inputs in_;
};

Json strings(const std::vector<std::string>& v) { return Json(v); }

std::string join_lines(const std::vector<std::string>& v, const std::string& prefix = "") {
  std::string s;
  for (const auto& x : v) s += prefix + x + "\n";
  return s;
}

Report finish(const Session& s, const Json& j, const std::string& text, bool truncated) {
  Report r;
  r.code = truncated ? kBudgetExhausted : kOk;
  if (s.config().format == Format::json) {
    r.text = j.dump(2) + "\n";
  } else {
    r.text = text;
    if (truncated) r.text += "truncated: true\n";
  }
  return r;
}

void require_text_or_json(const Session& s) {
  if (s.config().format == Format::svg) throw InvalidArgument("svg output is only available for fan");
}

Report cmd_sb(const Session& s) {
  require_text_or_json(s);
  const auto sig = s.signature();
  const auto ord = s.order(sig.homogenized() ? "base0" : "deg");
  IdealPresentation ip;
  if (ord.kind() == OrderDescriptor::Kind::lh_order || ord.kind() == OrderDescriptor::Kind::tri) {
    ip = s.homogeneous();
  } else {
    ip = s.presentation();
    if (!ip.homogenized && !ord.is_well_order())
      throw PreconditionViolated("order " + ord.describe() + " is not a well-order on D; use Vh or tri");
  }
  const auto b = reduced_basis(ip, ord, s.config().budget);
  std::vector<std::string> elems;
  for (const auto& q : b.elements()) elems.push_back(s.fmt(q, ord));
  Json j;
  j["order"] = ord.describe();
  j["ring"] = ip.homogenized ? "dz" : "d";
  j["basis"] = strings(elems);
  j["truncated"] = b.truncated();
  return finish(s, j, "order " + ord.describe() + "\n" + join_lines(elems), b.truncated());
}

VFan session_fan(const Session& s) {
  if (s.p() > 2) throw PreconditionViolated("fan computation is limited to p <= 2");
  return compute_fan(s.homogeneous(), s.config().budget);
}

Report cmd_fan(const Session& s, const std::string& svg_path) {
  const VFan fan = session_fan(s);
  if (!svg_path.empty()) {
    std::ofstream f(svg_path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write " + svg_path);
    f << fan_to_svg(fan);
  }
  Report r;
  r.code = fan.partial ? kBudgetExhausted : kOk;
  switch (s.config().format) {
    case Format::json: r.text = fan_to_json(fan); break;
    case Format::svg: r.text = fan_to_svg(fan); break;
    case Format::text: {
      std::ostringstream t;
      t << "cones " << fan.cones.size() << "\n";
      for (const auto& c : fan.cones) {
        t << cone_text(c.cone) << " kappa_sigma " << c.kappa_sigma << "\n";
        for (const auto& q : c.basis.elements()) t << "  " << s.fmt(q) << "\n";
      }
      t << "skeleton";
      for (const auto& d : fan.skeleton) t << ' ' << d.to_string();
      t << "\n";
      if (fan.partial) t << "truncated: true\n";
      else t << "kappa1 " << kappa1(fan).kappa1 << "\n";
      r.text = t.str();
      break;
    }
  }
  return r;
}

Report cmd_kappa(const Session& s) {
  require_text_or_json(s);
  const VFan fan = session_fan(s);
  if (fan.partial) throw BudgetExhausted("fan computation ran out of budget");
  const auto k = kappa1(fan);
  Json per = Json::array();
  std::string text;
  for (const auto& [cone, kap] : k.per_cone) {
    per.push_back({{"lower", ray_json(cone.lower)},
                   {"upper", ray_json(cone.upper)},
                   {"lower_closed", cone.lower_closed},
                   {"upper_closed", cone.upper_closed},
                   {"kappa_sigma", kap}});
    text += cone_text(cone) + " " + std::to_string(kap) + "\n";
  }
  Json j;
  j["per_cone"] = per;
  j["kappa1"] = k.kappa1;
  j["shift_vector"] = Json::array({k.shift_vector[0], k.shift_vector[1]});
  text += "kappa1 " + std::to_string(k.kappa1) + "\n";
  text += "shift (" + std::to_string(k.shift_vector[0]) + "," + std::to_string(k.shift_vector[1]) + ")\n";
  return finish(s, j, text, false);
}

Report cmd_divide(const Session& s, const std::string& dividend, const std::vector<std::string>& by) {
  require_text_or_json(s);
  if (by.empty()) throw InvalidArgument("divide needs at least one --by");
  const auto ord = s.order("base0");
  const DOp p = s.op(dividend);
  std::vector<DOp> divisors;
  for (const auto& b : by) divisors.push_back(s.op(b));
  const auto res = divide(p, divisors, ord, s.config().budget.division_steps);
  std::vector<std::string> qs;
  for (const auto& q : res.quotients) qs.push_back(s.fmt(q, ord));
  Json j;
  j["order"] = ord.describe();
  j["quotients"] = strings(qs);
  j["remainder"] = s.fmt(res.remainder, ord);
  j["steps"] = res.step_count;
  j["truncated"] = res.truncated;
  std::string text;
  for (std::size_t i = 0; i < qs.size(); ++i) text += "q" + std::to_string(i + 1) + " = " + qs[i] + "\n";
  text += "remainder = " + s.fmt(res.remainder, ord) + "\n";
  return finish(s, j, text, res.truncated);
}

Report cmd_nf(const Session& s, const std::string& text_op) {
  require_text_or_json(s);
  const auto sig = s.signature();
  const auto ord = s.order(sig.homogenized() ? "base0" : "deg");
  IdealPresentation ip;
  if (ord.kind() == OrderDescriptor::Kind::lh_order || ord.kind() == OrderDescriptor::Kind::tri) {
    ip = s.homogeneous();
  } else {
    ip = s.presentation();
    if (!ip.homogenized && !ord.is_well_order())
      throw PreconditionViolated("order " + ord.describe() + " is not a well-order on D; use Vh or tri");
  }
  DOp p = s.op(text_op);
  if (ip.homogenized && !sig.homogenized()) p = homogenize(p);
  const auto b = reduced_basis(ip, ord, s.config().budget);
  if (b.truncated()) throw BudgetExhausted("completion ran out of budget");
  const DOp r = normal_form(p, b, s.config().budget.division_steps);
  Json j;
  j["order"] = ord.describe();
  j["input"] = s.fmt(p, ord);
  j["normal_form"] = s.fmt(r, ord);
  j["truncated"] = false;
  return finish(s, j, s.fmt(r, ord) + "\n", false);
}

Report cmd_lower(const Session& s, const std::string& op_text, const std::string& witness_text,
                 const std::string& target_text, std::optional<std::size_t> cone_idx) {
  require_text_or_json(s);
  if (s.signature().homogenized()) throw InvalidArgument("lower works on Weyl representatives; use --ring d");
  ModuleContext ctx(s.weyl(), s.config().budget);
  const VFan& fan = ctx.fan();
  const SlopeDirection target = parse_direction(target_text);
  std::size_t idx = fan.cones.size();
  if (cone_idx) {
    idx = *cone_idx;
  } else {
    for (std::size_t i = 0; i < fan.cones.size() && idx == fan.cones.size(); ++i) {
      const auto& c = fan.cones[i].cone;
      if (!c.is_ray() && (c.lower == target || c.upper == target)) idx = i;
    }
    for (std::size_t i = 0; i < fan.cones.size() && idx == fan.cones.size(); ++i)
      if (fan.cones[i].cone.is_ray() && fan.cones[i].cone.lower == target) idx = i;
  }
  if (idx >= fan.cones.size()) throw InvalidArgument("no cone has " + target.to_string() + " as a generator");
  const auto view = cone_view(fan, idx);
  const int n = s.signature().n;
  const int p = s.p();
  std::vector<LinearForm> others;
  bool found = false;
  for (const auto& g : view.generators) {
    if (g == target) found = true;
    else others.push_back(g.form(n, p));
  }
  if (!found) throw InvalidArgument(target.to_string() + " is not a generator of cone " + std::to_string(idx));
  const LinearForm L = target.form(n, p);
  const DOp P = s.op(op_text);
  const DOp P1 = s.op(witness_text);
  const auto bound = ord_L(P1, L);
  if (!bound) throw InvalidArgument("the witness must be nonzero");
  const auto tr = lower_until(ctx, P, L, *bound, others, *view.basis, boundary_order(view.cone, target, n), P1);
  std::vector<std::string> orders;
  for (const auto& o : tr.target_orders) orders.push_back(ord_text(o));
  Json j;
  j["target"] = ray_json(target);
  j["cone"] = idx;
  j["result"] = s.fmt(tr.result);
  j["iterations"] = tr.iterations;
  j["target_orders"] = strings(orders);
  j["truncated"] = false;
  std::string text = s.fmt(tr.result) + "\niterations " + std::to_string(tr.iterations) + "\norders";
  for (const auto& o : orders) text += " " + o;
  return finish(s, j, text + "\n", false);
}

struct MemberArgs {
  std::string op;
  std::string kind = "V";
  std::string w;
  std::string L;
  std::string k = "0";
  std::size_t cone = 0;
};

Report cmd_member(const Session& s, const MemberArgs& a) {
  require_text_or_json(s);
  if (s.signature().homogenized()) throw InvalidArgument("member works on Weyl representatives; use --ring d");
  ModuleContext ctx(s.weyl(), s.config().budget);
  FiltrationQuery q;
  if (a.kind == "V") q.kind = FiltrationQuery::Kind::V;
  else if (a.kind == "VL") q.kind = FiltrationQuery::Kind::VL;
  else if (a.kind == "sigmaV") q.kind = FiltrationQuery::Kind::sigmaV;
  else if (a.kind == "Vbar") q.kind = FiltrationQuery::Kind::Vbar;
  else throw InvalidArgument("unknown filtration kind '" + a.kind + "'");
  if (q.kind == FiltrationQuery::Kind::VL) {
    if (a.L.empty()) throw InvalidArgument("VL needs --L");
    q.L = v_form_of(s.signature().n, s.p(), a.L);
    q.k = parse_rational(a.k);
  } else {
    if (a.w.empty()) throw InvalidArgument(a.kind + " needs --w");
    q.w = parse_ints(a.w);
  }
  q.cone = a.cone;
  const auto r = filtration_member(ctx, s.op(a.op), q);
  const char* status = r.status == MembershipStatus::member        ? "member"
                       : r.status == MembershipStatus::truncated ? "truncated"
                                                                  : "no_certificate";
  Json j;
  j["kind"] = a.kind;
  j["status"] = status;
  j["member"] = r.member();
  j["certificate"] = r.certificate ? Json(s.fmt(*r.certificate)) : Json(nullptr);
  Json wit = Json::array();
  std::string text = std::string("status ") + status + "\n";
  if (r.certificate) text += "certificate " + s.fmt(*r.certificate) + "\n";
  for (const auto& [ray, rep] : r.witnesses) {
    wit.push_back({{"ray", ray_json(ray)}, {"representative", s.fmt(rep)}});
    text += "witness " + ray.to_string() + " " + s.fmt(rep) + "\n";
  }
  j["witnesses"] = wit;
  j["bounds"] = strings(r.bounds);
  j["trace"] = strings(r.trace);
  j["truncated"] = r.status == MembershipStatus::truncated;
  text += join_lines(r.bounds, "bound ") + join_lines(r.trace, "trace ");
  return finish(s, j, text, r.status == MembershipStatus::truncated);
}

Report cmd_assemble(const Session& s, const std::vector<std::string>& factors, const std::string& v_text,
                    const std::string& kappa_text, const std::string& skeleton_text) {
  require_text_or_json(s);
  const int p = s.p();
  const auto v = parse_ints(v_text);
  if (v.size() != static_cast<std::size_t>(p)) throw InvalidArgument("--v must have p entries");
  std::vector<std::int64_t> kappa(static_cast<std::size_t>(p), 0);
  std::vector<std::vector<std::int64_t>> skel;
  std::optional<VFan> fan;
  if (s.has_ideal() && (kappa_text.empty() || skeleton_text.empty())) {
    fan = session_fan(s);
    if (fan->partial) throw BudgetExhausted("fan computation ran out of budget");
  }
  if (!kappa_text.empty()) {
    kappa = parse_ints(kappa_text);
    if (kappa.size() != static_cast<std::size_t>(p)) throw InvalidArgument("--kappa must have p entries");
  } else if (fan && p == 2) {
    const auto k = kappa1(*fan);
    kappa = {k.shift_vector[0], k.shift_vector[1]};
  }
  if (!skeleton_text.empty()) {
    std::size_t pos = 0;
    while (pos <= skeleton_text.size()) {
      const std::size_t end = std::min(skeleton_text.find(';', pos), skeleton_text.size());
      skel.push_back(parse_ints(skeleton_text.substr(pos, end - pos)));
      pos = end + 1;
    }
  } else if (fan) {
    for (const auto& d : fan->skeleton)
      skel.push_back(p == 1 ? std::vector<std::int64_t>{d.a()} : std::vector<std::int64_t>{d.a(), d.b()});
  } else {
    for (int j = 0; j < p; ++j) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(p), 0);
      e[static_cast<std::size_t>(j)] = 1;
      skel.push_back(e);
    }
  }
  BsatoFactors bf;
  bf.provenance = "command line";
  const std::vector<std::string> lambda{"l"};
  for (const auto& f : factors) {
    const auto colon = f.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'a,b:polynomial in l' in '" + f + "'", 0);
    auto ray = parse_ints(f.substr(0, colon));
    if (ray.size() != static_cast<std::size_t>(p)) throw InvalidArgument("factor ray must have p entries");
    try {
      bf.b_L[ray] = parse_polynomial(f.substr(colon + 1), lambda);
    } catch (const ParseError& e) {
      throw ParseError("in factor '" + f + "': " + e.what(), colon + 1 + e.position());
    }
  }
  const auto b = assemble_b(bf, kappa, v, skel);
  const auto names = s_names(p);
  std::vector<std::string> fs;
  for (const auto& f : b.factors) fs.push_back(f.to_string(names));
  Json j;
  j["v"] = v;
  j["kappa"] = kappa;
  j["skeleton"] = skel;
  j["factors"] = strings(fs);
  j["factored"] = b.factored(names);
  j["expanded"] = b.product.to_string(names);
  j["truncated"] = false;
  return finish(s, j, b.factored(names) + "\n" + b.product.to_string(names) + "\n", false);
}

void add_common(CLI::App* sub, SessionConfig& cfg, Inputs& in, std::string& ring, std::string& format,
                int& p_raw) {
  sub->add_option("-n", cfg.n, "number of x variables")->capture_default_str();
  sub->add_option("-p", p_raw, "number of t variables");
  sub->add_option("-f", in.functions, "polynomial f_j in x1..xn (repeatable); builds the Malgrange ideal");
  sub->add_option("-g", in.generators, "ideal generator in the operator grammar (repeatable)");
  sub->add_option("--ring", ring, "d (Weyl ring) or dz (homogenized ring)")
      ->check(CLI::IsMember({"d", "dz"}))
      ->capture_default_str();
  sub->add_option("--order", cfg.order, "base0, deg, V:l, Vh:l or tri:l@lsigma");
  sub->add_option("--budget-div", cfg.budget.division_steps, "division step limit")->capture_default_str();
  sub->add_option("--budget-sb", cfg.budget.completion_steps, "completion step limit")->capture_default_str();
  sub->add_option("--budget-lower", cfg.budget.lowering_iterations, "order-lowering iteration limit")
      ->capture_default_str();
  sub->add_option("--format", format, "text, json or svg")
      ->check(CLI::IsMember({"text", "json", "svg"}))
      ->capture_default_str();
  sub->add_option("--out", cfg.out, "write the report to this file");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact V-filtration and Bernstein-Sato toolkit for D-modules"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  SessionConfig cfg;
  Inputs in;
  std::string ring = "d";
  std::string format = "text";
  int p_raw = 0;
  std::string svg_path;
  std::string op_text;
  std::vector<std::string> by;
  std::string witness;
  std::string target;
  std::optional<std::size_t> cone_idx;
  MemberArgs member;
  std::vector<std::string> factors;
  std::string v_text;
  std::string kappa_text;
  std::string skeleton_text;

  auto* sb = app.add_subcommand("sb", "reduced minimal standard basis of the ideal");
  auto* fan = app.add_subcommand("fan", "V-Groebner fan of h(I) for p <= 2");
  auto* kap = app.add_subcommand("kappa", "per-cone and global kappa bound");
  auto* div = app.add_subcommand("divide", "division of an operator by a list of operators");
  auto* nf = app.add_subcommand("nf", "normal form modulo the ideal");
  auto* low = app.add_subcommand("lower", "order lowering at a cone generator");
  auto* mem = app.add_subcommand("member", "filtration membership with certificate");
  auto* asb = app.add_subcommand("assemble-b", "assemble the candidate Bernstein-Sato product");
  for (auto* sub : {sb, fan, kap, div, nf, low, mem, asb}) add_common(sub, cfg, in, ring, format, p_raw);

  fan->add_option("--svg", svg_path, "also write the quadrant picture to this file");
  div->add_option("--op", op_text, "dividend")->required();
  div->add_option("--by", by, "divisor (repeatable)")->required();
  nf->add_option("--op", op_text, "operator to reduce")->required();
  low->add_option("--op", op_text, "representative P")->required();
  low->add_option("--witness", witness, "representative P1 of the same element with smaller order")->required();
  low->add_option("--target", target, "target generator, e.g. 1,0")->required();
  low->add_option("--cone", cone_idx, "index of the cone in the fan");
  mem->add_option("--op", member.op, "representative P of m = P delta")->required();
  mem->add_option("--kind", member.kind, "V, VL, sigmaV or Vbar")->capture_default_str();
  mem->add_option("--w", member.w, "filtration index, e.g. 1,0");
  mem->add_option("--L", member.L, "V-form weights for VL, e.g. 1,2");
  mem->add_option("--k", member.k, "level for VL")->capture_default_str();
  mem->add_option("--cone", member.cone, "cone index for sigmaV")->capture_default_str();
  asb->add_option("--bL", factors, "factor b_L as 'a,b:poly in l' (repeatable)")->required();
  asb->add_option("--v", v_text, "shift vector v")->required();
  asb->add_option("--kappa", kappa_text, "shift bound kappa (computed from the fan when omitted)");
  asb->add_option("--skeleton", skeleton_text, "skeleton rays as 'a,b;c,d' (from the fan when omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  cfg.ring = ring == "dz" ? Ring::homogenized : Ring::weyl;
  cfg.format = format == "json" ? Format::json : format == "svg" ? Format::svg : Format::text;
  if (p_raw != 0) cfg.p = p_raw;

  auto emit = [&](const std::string& text) {
    if (cfg.out.empty()) {
      out << text;
      return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write " + cfg.out);
    f << text;
  };

  auto fail = [&](int code, const std::string& kind, const std::string& msg) {
    err << "bsfan: " << msg << "\n";
    if (cfg.format == Format::json) {
      Json j;
      j["error"] = kind;
      j["message"] = msg;
      j["truncated"] = code == kBudgetExhausted;
      try {
        emit(j.dump(2) + "\n");
      } catch (const std::exception&) {
      }
    } else if (code == kBudgetExhausted) {
      try {
        emit("truncated: true\n");
      } catch (const std::exception&) {
      }
    }
    return code;
  };

  try {
    Session s(cfg, in);
    s.settle();
    Report r;
    if (*sb) r = cmd_sb(s);
    else if (*fan) r = cmd_fan(s, svg_path);
    else if (*kap) r = cmd_kappa(s);
    else if (*div) r = cmd_divide(s, op_text, by);
    else if (*nf) r = cmd_nf(s, op_text);
    else if (*low) r = cmd_lower(s, op_text, witness, target, cone_idx);
    else if (*mem) r = cmd_member(s, member);
    else r = cmd_assemble(s, factors, v_text, kappa_text, skeleton_text);
    emit(r.text);
    if (r.code == kBudgetExhausted) err << "bsfan: budget exhausted; output is partial\n";
    return r.code;
  } catch (const ParseError& e) {
    return fail(kParseError, "parse_error", e.what());
  } catch (const BudgetExhausted& e) {
    return fail(kBudgetExhausted, "budget_exhausted", e.what());
  } catch (const PreconditionViolated& e) {
    return fail(kPreconditionViolated, "precondition_violated", e.what());
  } catch (const std::exception& e) {
    return fail(kFailure, "error", e.what());
  }
}

}  // namespace bsfan::cli
