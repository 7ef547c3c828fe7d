#include "markoff/markoff.h"

#include <cstring>
#include <json.hpp>
#include <string>

#include "markoff/constructions.hpp"
#include "markoff/contfrac.hpp"
#include "markoff/equations.hpp"
#include "markoff/gl2z.hpp"
#include "markoff/spectrum.hpp"
#include "markoff/torus.hpp"

using json = nlohmann::ordered_json;
using namespace markoff;

struct mk_context {
  long digits = Real::kDefaultDigits;
  unsigned threads = 1;
  std::string error;
};

struct mk_result {
  std::string text;
};

struct mk_equation {
  Equation eq;
};

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json jint(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json jsurd(const QuadraticSurd& s, long digits) {
  return {{"decimal", s.to_string(digits)},
          {"exact", json::array({jint(s.p()), jint(s.q()), jint(s.r()), jint(s.d())})},
          {"text", s.exact_string()}};
}

json jtriple(const Triple& t) { return json::array({jint(t.m), jint(t.m1), jint(t.m2)}); }

json jequation(const Equation& e) {
  return {{"eps1", e.eps1}, {"eps2", e.eps2}, {"a", jint(e.a)}, {"dK", jint(e.dK)}, {"u", jint(e.u)},
          {"literal", std::string(e.eps1 > 0 ? "+" : "-") + (e.eps2 > 0 ? "+" : "-") + "," + e.a.get_str() +
                          "," + e.dK.get_str() + "," + e.u.get_str()}};
}

json jmat(const Mat2& M) {
  return json::array({json::array({jint(M.a), jint(M.b)}), json::array({jint(M.c), jint(M.d)})});
}

json jreal(const Real& r, long digits) { return r.to_string(digits); }

json jrmat(const RealMat2& M, long digits) {
  return json::array({json::array({jreal(M.a, digits), jreal(M.b, digits)}),
                      json::array({jreal(M.c, digits), jreal(M.d, digits)})});
}

const json& need(const json& args, const char* key) {
  if (!args.contains(key)) throw UsageError(std::string("missing argument '") + key + "'");
  return args.at(key);
}

std::string text_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ",") + text_of(e);
    return s;
  }
  throw ParseError("expected a string or integer, got " + v.dump());
}

BigInt big(const json& args, const char* key) { return parse_bigint(text_of(need(args, key))); }

BigInt big_or(const json& args, const char* key, long fallback) {
  return args.contains(key) ? big(args, key) : BigInt(fallback);
}

std::string str(const json& args, const char* key) { return text_of(need(args, key)); }

Equation equation_arg(const json& args) {
  const json& v = need(args, "equation");
  if (v.is_object())
    return {v.at("eps1").get<int>(), v.at("eps2").get<int>(), parse_bigint(text_of(v.at("a"))),
            parse_bigint(text_of(v.at("dK"))), parse_bigint(text_of(v.at("u")))};
  return Equation::parse(text_of(v));
}

Triple triple_arg(const json& args, const char* key = "triple") { return Triple::parse(text_of(need(args, key))); }

int sign_arg(const json& args, const char* key, int fallback) {
  if (!args.contains(key)) return fallback;
  const json& v = args.at(key);
  if (v.is_number_integer()) {
    int e = v.get<int>();
    if (e == 1 || e == -1) return e;
  } else if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "+" || s == "+1" || s == "1") return 1;
    if (s == "-" || s == "-1") return -1;
  }
  throw ParseError(std::string("'") + key + "' must be +1 or -1");
}

json decomposition_json(const Decomposition& d) {
  json j{{"X1", format_sequence(d.X1)},
         {"b", jint(d.b)},
         {"X2", format_sequence(d.X2)},
         {"structured", d.structured},
         {"c", jint(d.c)},
         {"T", format_sequence(d.T)},
         {"star", format_sequence(d.star())},
         {"sequence", format_sequence(d.sequence())},
         {"triple", jtriple(d.triple())},
         {"m", jint(d.m)},
         {"K1", jint(d.K1)},
         {"K2", jint(d.K2)},
         {"l", jint(d.l)},
         {"m1", jint(d.m1)},
         {"k1", jint(d.k1)},
         {"k12", jint(d.k12)},
         {"l1", jint(d.l1)},
         {"m2", jint(d.m2)},
         {"k2", jint(d.k2)},
         {"k21", jint(d.k21)},
         {"l2", jint(d.l2)},
         {"eps1", d.eps1},
         {"eps2", d.eps2},
         {"t1", jint(d.t1)},
         {"t2", jint(d.t2)},
         {"u", jint(d.u)},
         {"dK", jint(d.dK)}};
  j["identity_failures"] = identity_failures(d);
  return j;
}

json constant_json(const Constant& c, long digits) {
  json at = json::array();
  for (auto i : c.attained_at) at.push_back(i);
  return {{"period", format_sequence(c.period)}, {"value", jsurd(c.value, digits)}, {"attained_at", at}};
}

Constant constant_for_triple(const Equation& eq, const Triple& t, std::string& route) {
  for (const auto& d : reconstruct_all(t.m, t.m1, t.m2, eq.eps1, eq.eps2)) {
    if (d.equation(eq.a) == eq) {
      route = "sequence";
      return markoff_constant(concat(d.star(), Sequence{eq.a}));
    }
  }
  MarkoffForm f = form_of_triple(eq, t);
  route = "form";
  return constant_of_form(f.A, f.B, f.C);
}

json cmd_solve(const mk_context& ctx, const json& args) {
  (void)ctx;
  Equation eq = equation_arg(args);
  Triple t = triple_arg(args);
  json out{{"equation", jequation(eq)}, {"triple", jtriple(t)}, {"height", jint(height(t))}};
  bool ok = is_solution(eq, t);
  out["is_solution"] = ok;
  EquationClassification ec = classify_equation(eq);
  out["equation_class"] = {{"kind", class_name(ec.kind)}, {"delta0", jint(ec.delta0)}};
  json roots = json::object();
  const char* names[] = {"m", "m1", "m2"};
  for (int pos = 0; pos < 3; ++pos) {
    json r = json::array();
    for (const auto& v : solve_coordinate(eq, t, pos)) r.push_back(jint(v));
    roots[names[pos]] = r;
  }
  out["roots"] = roots;
  if (!ok) return out;
  Classification c = classify_triple(eq, t);
  out["classification"] = {{"kind", kind_name(c.kind)},
                           {"via", c.kind == TripleKind::reducible ? std::string(1, involution_letter(c.via))
                                                                   : std::string()},
                           {"minimality_criterion", c.minimality_criterion}};
  json images = json::object();
  for (Involution w : {Involution::N, Involution::X, Involution::Y, Involution::Z, Involution::P}) {
    if (w == Involution::P && eq.eps1 != eq.eps2) continue;
    images[std::string(1, involution_letter(w))] = jtriple(apply_involution(eq, t, w));
  }
  out["images"] = images;
  if (t.m != 0) {
    Divisibility dv = divisibility_form(eq, t);
    out["divisibility"] = {{"mu", jint(dv.mu)},
                           {"remainder", jint(dv.remainder)},
                           {"holds", dv.holds},
                           {"determines_u", dv.determines_u}};
  }
  if (args.contains("b")) out["reparametrized"] = jequation(reparametrize(eq, t, big(args, "b")));
  return out;
}

json cmd_descend(const mk_context&, const json& args) {
  Equation eq = equation_arg(args);
  Triple t = triple_arg(args);
  DescentReport r = descend(eq, t);
  std::string path;
  for (auto w : r.path) path.push_back(involution_letter(w));
  json heights = json::array();
  for (const auto& h : r.heights) heights.push_back(jint(h));
  return {{"equation", jequation(eq)},
          {"triple", jtriple(t)},
          {"path", path},
          {"heights", heights},
          {"terminal", jtriple(r.terminal)},
          {"terminal_kind", kind_name(r.terminal_kind)}};
}

Symmetry symmetry_arg(const json& args, const Equation& eq) {
  std::string s = args.contains("symmetry") ? text_of(args.at("symmetry")) : "auto";
  if (s == "auto") return symmetry_of(eq);
  if (s == "none") return Symmetry::none;
  if (s == "swap12") {
    if (symmetry_of(eq) == Symmetry::none) throw DomainError("equation is not symmetric in m1, m2");
    return Symmetry::swap12;
  }
  if (s == "full") {
    if (symmetry_of(eq) != Symmetry::full) throw DomainError("equation is not fully symmetric");
    return Symmetry::full;
  }
  throw ParseError("symmetry must be auto, none, swap12 or full");
}

json cmd_forest(const mk_context& ctx, const json& args) {
  Equation eq = equation_arg(args);
  BigInt bound = big(args, "bound");
  if (bound < 1) throw DomainError("height bound must be at least 1");
  ForestOptions opts;
  opts.threads = ctx.threads;
  opts.reduce = symmetry_arg(args, eq);
  opts.include_negated = args.value("include_negated", false);
  Forest f = enumerate_forest(eq, bound, opts);
  json entries = json::array();
  for (const auto& e : f.entries)
    entries.push_back({{"triple", jtriple(e.triple)},
                       {"orbit_id", e.orbit},
                       {"height", jint(e.height)},
                       {"kind", kind_name(e.kind)}});
  json orbits = json::array();
  for (const auto& o : f.orbits)
    orbits.push_back({{"orbit_id", o.id},
                      {"terminal", jtriple(o.terminal)},
                      {"kind", kind_name(o.kind)},
                      {"size", o.size},
                      {"cycle", o.cycle}});
  json out{{"equation", jequation(eq)}, {"bound", jint(bound)}, {"entries", entries}, {"orbits", orbits}};
  if (f.family) out["infinite_family"] = {{"m", jint(f.family->m)}, {"description", f.family->description}};
  return out;
}

json cmd_scan_s(const mk_context&, const json& args) {
  BigInt from = big_or(args, "from", 1), to = big_or(args, "to", 50);
  if (from < 1 || to < from) throw DomainError("scan range needs 1 <= from <= to");
  json records = json::array(), unsolvable = json::array();
  for (BigInt s = from; s <= to; ++s) {
    Solvability r = solvability_scan_2_0_u(s);
    json rec{{"s", jint(s)}, {"solvable", r.solvable}, {"candidates", jint(r.candidates)}};
    if (r.solvable)
      rec["witness"] = jtriple(r.witness);
    else
      unsolvable.push_back(jint(s));
    records.push_back(rec);
  }
  return {{"records", records}, {"unsolvable", unsolvable}};
}

json cmd_constant(const mk_context& ctx, const json& args) {
  if (args.contains("period")) {
    Sequence p = parse_sequence(str(args, "period"));
    return constant_json(markoff_constant(p), ctx.digits);
  }
  if (args.contains("fibonacci")) {
    FibonacciMember f = fibonacci_family_constant(big(args, "fibonacci"));
    QuadraticSurd gap = QuadraticSurd(Rational(1, 3)) - f.value;
    return {{"p", jint(f.p)},
            {"q", jint(f.q)},
            {"triple", jtriple(f.triple)},
            {"equation", jequation(Equation::parse("++,2,0,-2"))},
            {"value", jsurd(f.value, ctx.digits)},
            {"distance_to_one_third", jsurd(gap, ctx.digits)}};
  }
  if (args.contains("segment")) {
    Segment s = segment_Ua(big(args, "segment"));
    return {{"a", jint(big(args, "segment"))}, {"lo", jsurd(s.lo, ctx.digits)}, {"hi", jsurd(s.hi, ctx.digits)}};
  }
  if (args.contains("triple")) {
    Equation eq = equation_arg(args);
    Triple t = triple_arg(args);
    if (!is_solution(eq, t)) throw DomainError(t.to_string() + " does not solve " + eq.to_string());
    std::string route;
    json out = constant_json(constant_for_triple(eq, t, route), ctx.digits);
    out["route"] = route;
    out["equation"] = jequation(eq);
    out["triple"] = jtriple(t);
    return out;
  }
  throw UsageError("constant needs one of period, fibonacci, segment, or equation with triple");
}

json cmd_spectrum(const mk_context& ctx, const json& args) {
  Equation eq = equation_arg(args);
  BigInt bound = big(args, "bound");
  if (bound < 1) throw DomainError("height bound must be at least 1");
  json records = json::array();
  for (const auto& r : spectrum_scan(eq, bound, ctx.threads)) {
    json rec{{"equation", jequation(r.equation)["literal"]}, {"triple", jtriple(r.triple)}};
    if (r.constant) {
      rec["period"] = format_sequence(r.constant->period);
      rec["constant_decimal"] = r.constant->value.to_string(ctx.digits);
      const QuadraticSurd& v = r.constant->value;
      rec["constant_exact"] = json::array({jint(v.p()), jint(v.q()), jint(v.r()), jint(v.d())});
      rec["route"] = r.route;
    } else {
      rec["error"] = r.error;
    }
    records.push_back(rec);
  }
  return {{"equation", jequation(eq)}, {"bound", jint(bound)}, {"records", records}};
}

Decomposition decomposition_arg(const json& args) {
  if (args.contains("seq")) return decompose(parse_sequence(str(args, "seq")));
  if (args.contains("star")) {
    // X1;b;X2
    std::string s = str(args, "star");
    auto p1 = s.find(';'), p2 = s.rfind(';');
    if (p1 == std::string::npos || p1 == p2) throw ParseError("star literal needs X1;b;X2");
    return make_decomposition(parse_sequence(s.substr(0, p1)), parse_bigint(s.substr(p1 + 1, p2 - p1 - 1)),
                              parse_sequence(s.substr(p2 + 1)));
  }
  if (args.contains("triple")) {
    Equation eq = equation_arg(args);
    Triple t = triple_arg(args);
    return reconstruct(t.m, t.m1, t.m2, eq.eps1, eq.eps2, eq.a).decomposition;
  }
  throw UsageError("decomposition needs seq, star, or equation with triple");
}

json cmd_decompose(const mk_context&, const json& args) {
  Decomposition d = decomposition_arg(args);
  json out = decomposition_json(d);
  if (args.contains("a")) out["equation"] = jequation(d.equation(big(args, "a")));
  return out;
}

json cmd_reconstruct(const mk_context&, const json& args) {
  Triple t = triple_arg(args);
  int e1 = 1, e2 = 1;
  BigInt a = 2;
  if (args.contains("equation")) {
    Equation eq = equation_arg(args);
    e1 = eq.eps1;
    e2 = eq.eps2;
    a = eq.a;
  }
  e1 = sign_arg(args, "eps1", e1);
  e2 = sign_arg(args, "eps2", e2);
  if (args.contains("a")) a = big(args, "a");
  json cands = json::array();
  for (const auto& d : reconstruct_all(t.m, t.m1, t.m2, e1, e2)) {
    json j = decomposition_json(d);
    j["equation"] = jequation(d.equation(a));
    cands.push_back(j);
  }
  Reconstruction r = reconstruct(t.m, t.m1, t.m2, e1, e2, a);
  json chosen = decomposition_json(r.decomposition);
  chosen["equation"] = jequation(r.equation);
  return {{"triple", jtriple(t)}, {"chosen", chosen}, {"candidates", cands}};
}

json cmd_construct(const mk_context&, const json& args) {
  ConstructionKind kind = construction_from_name(str(args, "kind"));
  ConstructionResult r = construct(kind, decomposition_arg(args));
  json src = decomposition_json(r.source), res = decomposition_json(r.result);
  return {{"kind", construction_name(kind)},
          {"source", src},
          {"source_equation", jequation(r.source_equation)},
          {"result", res},
          {"target_equation", jequation(r.target_equation)},
          {"solves", r.solves},
          {"grows", r.grows},
          {"cohn", is_cohn_triple(r.result.triple())}};
}

json cmd_gl2z(const mk_context&, const json& args) {
  Mat2 V = parse_matrix(str(args, "matrix"));
  json out{{"matrix", jmat(V)}, {"det", jint(V.det())}};
  try {
    TernaryDecomp t = ternary_decompose(V);
    out["ternary"] = {{"h", t.h}, {"k", t.k}, {"word", t.word}, {"roundtrip", recompose(t) == V}};
  } catch (const DomainError& e) {
    out["ternary"] = {{"error", e.what()}};
  }
  try {
    ABDecomp d = ab_decompose(V);
    out["ab"] = {{"sign", d.sign}, {"h", d.h}, {"k", d.k}, {"word", d.word}, {"roundtrip", recompose(d) == V}};
  } catch (const DomainError& e) {
    out["ab"] = {{"error", e.what()}};
  }
  return out;
}

json cmd_fricke(const mk_context&, const json& args) {
  Mat2 A = parse_matrix(str(args, "a")), B = parse_matrix(str(args, "b"));
  FrickeTrace f = fricke_commutator_trace(A, B);
  BigInt ta = A.trace(), tb = B.trace(), tab = (A * B).trace();
  BigInt sig = ta * ta + tb * tb + tab * tab - ta * tb * tab;
  return {{"trA", jint(ta)},      {"trB", jint(tb)},       {"trAB", jint(tab)},
          {"epsA", f.epsA},       {"epsB", f.epsB},        {"formula", jint(f.formula)},
          {"direct", jint(f.direct)}, {"sigma", jint(sig)}, {"commutator", jmat(commutator(A, B))}};
}

json cmd_dedekind(const mk_context&, const json& args) {
  BigInt d = big(args, "delta"), g = big(args, "gamma");
  Rational s = dedekind_sum(d, g);
  json out{{"delta", jint(d)}, {"gamma", jint(g)}, {"value", to_string(s)}};
  if (d > 0 && g > 0 && gcd(d, g) == 1) {
    Rational lhs = s + dedekind_sum(g, d);
    Rational rhs = (Rational(d, g) + Rational(g, d) + make_rational(1, d * g)) / 12 - Rational(1, 4);
    lhs.canonicalize();
    rhs.canonicalize();
    out["reciprocity"] = {{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}, {"holds", lhs == rhs}};
  }
  return out;
}

json exact_triple_json(const ExactTraceTriple& t, long digits) {
  return json::array({jsurd(t.x, digits), jsurd(t.y, digits), jsurd(t.z, digits)});
}

json super_json(const SuperReduction<QuadraticSurd>& s, long digits) {
  return {{"lambda", jsurd(s.lambda, digits)},
          {"mu", jsurd(s.mu, digits)},
          {"module", jsurd(s.module, digits)},
          {"triple", exact_triple_json(s.triple, digits)},
          {"ops", s.ops},
          {"super_reduced", is_super_reduced(s.lambda, s.mu)}};
}

json cmd_torus_reduce(const mk_context& ctx, const json& args) {
  if (args.contains("lambda")) {
    ExactParams p{QuadraticSurd::parse(str(args, "lambda")), QuadraticSurd::parse(str(args, "mu"))};
    ExactTraceTriple t = parabolic_triple(p.lambda, p.mu);
    return {{"lambda", jsurd(p.lambda, ctx.digits)},
            {"mu", jsurd(p.mu, ctx.digits)},
            {"triple", exact_triple_json(t, ctx.digits)},
            {"super", super_json(super_reduce(p), ctx.digits)}};
  }
  ExactTraceTriple t = parse_exact_triple(str(args, "triple"));
  TorusKind kind = classify(t);
  json out{{"triple", exact_triple_json(t, ctx.digits)},
           {"sigma", jsurd(sigma(t), ctx.digits)},
           {"kind", torus_kind_name(kind)}};
  auto red = reduce_triple(t);
  out["reduced"] = exact_triple_json(red.triple, ctx.digits);
  out["path"] = red.path;
  out["super"] = super_json(super_reduce(parabolic_params(t)), ctx.digits);
  return out;
}

RealTraceTriple real_triple_arg(const std::string& text, long bits) {
  try {
    return to_real(parse_exact_triple(text), bits);
  } catch (const ParseError&) {
    std::vector<std::string> parts(1);
    for (char c : text) {
      if (c == ',' || c == ';')
        parts.emplace_back();
      else
        parts.back().push_back(c);
    }
    if (parts.size() != 3) throw ParseError("trace triple needs three entries: " + text);
    return {Real::parse(parts[0], bits), Real::parse(parts[1], bits), Real::parse(parts[2], bits)};
  }
}

json cmd_torus_params(const mk_context& ctx, const json& args) {
  const long digits = ctx.digits;
  const long bits = Real::bits_for_digits(digits + 16);
  ParamsOptions opts;
  opts.digits = digits;
  opts.allow_positive_sigma = args.value("allow_positive_sigma", false);
  TorusParams p;
  json out = json::object();
  if (args.contains("triple")) {
    RealTraceTriple t = real_triple_arg(str(args, "triple"), bits);
    int eps = sign_arg(args, "epsilon", 1);
    out["sigma"] = jreal(sigma(t), digits);
    out["kind"] = torus_kind_name(classify(t, digits));
    p = params_from_traces(t, eps, opts);
    ConeFR c = cone_FR(t, eps, opts);
    out["cone"] = {{"M", jreal(c.M, digits)},
                   {"M1", jreal(c.M1, digits)},
                   {"M2", jreal(c.M2, digits)},
                   {"residual", jreal(c.residual, 6)}};
  } else {
    p.lambda = Real::parse(str(args, "lambda"), bits);
    p.mu = Real::parse(str(args, "mu"), bits);
    p.theta = args.contains("theta") ? Real::parse(str(args, "theta"), bits) : Real(1L, bits);
  }
  out["epsilon"] = p.epsilon;
  out["lambda"] = jreal(p.lambda, digits);
  out["mu"] = jreal(p.mu, digits);
  out["theta"] = jreal(p.theta, digits);
  if (p.lambda.sign() > 0 && p.mu.sign() > 0 && p.theta.sign() > 0) {
    auto [A, B] = matrices_from_params(p);
    RealTraceTriple back = traces_of(A, B);
    out["A"] = jrmat(A, digits);
    out["B"] = jrmat(B, digits);
    out["detA"] = jreal(A.det(), digits);
    out["detB"] = jreal(B.det(), digits);
    out["traces"] = json::array({jreal(back.x, digits), jreal(back.y, digits), jreal(back.z, digits)});
  }
  return out;
}

json cmd_audit(const mk_context&, const json&) {
  HyperbolicAudit h = hyperbolic_example_audit();
  json items = json::array();
  for (const auto& i : h.items)
    items.push_back({{"name", i.name},
                     {"computed", i.computed},
                     {"expected", i.expected},
                     {"match", i.match},
                     {"informational", i.informational}});
  return {{"A", jmat(h.A)}, {"B", jmat(h.B)}, {"L", jmat(h.L)}, {"U", jmat(h.U)},
          {"V", jmat(h.V)}, {"items", items}, {"all_match", h.all_match()}};
}

json cmd_section_cubic(const mk_context&, const json& args) {
  Equation eq = equation_arg(args);
  Triple t = triple_arg(args);
  std::string rel = str(args, "relation");
  Triple pqr = Triple::parse(rel);
  LinearRelation lr{pqr.m, pqr.m1, pqr.m2};
  long radius = args.contains("radius") ? big(args, "radius").get_si() : 50;
  if (radius < 0 || radius > 100000) throw DomainError("radius must be in 0..100000");
  Cubic c = plane_section_cubic(eq, t, lr);
  json terms = json::array();
  for (const auto& m : c.terms) terms.push_back({{"coeff", jint(m.coeff)}, {"x", m.x}, {"z", m.z}});
  json pts = json::array();
  for (const auto& [x, z] : cubic_integer_points(c, radius)) {
    auto y = lift_point(eq, lr, x, z);
    pts.push_back({{"x", jint(x)}, {"z", jint(z)}, {"y", y ? jint(*y) : json(nullptr)}});
  }
  return {{"equation", jequation(eq)},
          {"triple", jtriple(t)},
          {"relation", json::array({jint(lr.p), jint(lr.q), jint(lr.r)})},
          {"cubic", c.to_string()},
          {"terms", terms},
          {"value_at_triple", jint(c.evaluate(t.m, t.m2))},
          {"radius", radius},
          {"points", pts}};
}

using Handler = json (*)(const mk_context&, const json&);

Handler find_handler(const std::string& name) {
  static const std::pair<const char*, Handler> table[] = {
      {"solve", cmd_solve},
      {"descend", cmd_descend},
      {"forest", cmd_forest},
      {"scan-s", cmd_scan_s},
      {"constant", cmd_constant},
      {"spectrum", cmd_spectrum},
      {"decompose-seq", cmd_decompose},
      {"reconstruct", cmd_reconstruct},
      {"construct", cmd_construct},
      {"gl2z-decompose", cmd_gl2z},
      {"fricke", cmd_fricke},
      {"dedekind", cmd_dedekind},
      {"torus-reduce", cmd_torus_reduce},
      {"torus-params", cmd_torus_params},
      {"audit-hyperbolic", cmd_audit},
      {"section-cubic", cmd_section_cubic},
  };
  for (const auto& [n, h] : table)
    if (name == n) return h;
  return nullptr;
}

template <class F>
mk_status guarded(mk_context* ctx, F&& body) {
  std::string sink;
  std::string& err = ctx ? ctx->error : sink;
  err.clear();
  try {
    body();
    return MK_OK;
  } catch (const UsageError& e) {
    err = e.what();
    return MK_ERR_USAGE;
  } catch (const ParseError& e) {
    err = e.what();
    return MK_ERR_PARSE;
  } catch (const json::exception& e) {
    err = e.what();
    return MK_ERR_PARSE;
  } catch (const DomainError& e) {
    err = e.what();
    return MK_ERR_DOMAIN;
  } catch (const std::exception& e) {
    err = e.what();
    return MK_ERR_INTERNAL;
  } catch (...) {
    err = "unknown error";
    return MK_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* mk_version(void) { return "1.0.0"; }

mk_context* mk_context_new(void) { return new (std::nothrow) mk_context(); }

void mk_context_free(mk_context* ctx) { delete ctx; }

mk_status mk_context_set_precision(mk_context* ctx, long digits) {
  if (!ctx) return MK_ERR_USAGE;
  if (digits < 16) {
    ctx->error = "precision must be at least 16 digits";
    return MK_ERR_USAGE;
  }
  ctx->digits = digits;
  ctx->error.clear();
  return MK_OK;
}

long mk_context_precision(const mk_context* ctx) { return ctx ? ctx->digits : 0; }

mk_status mk_context_set_threads(mk_context* ctx, unsigned threads) {
  if (!ctx) return MK_ERR_USAGE;
  if (threads < 1) {
    ctx->error = "threads must be at least 1";
    return MK_ERR_USAGE;
  }
  ctx->threads = threads;
  ctx->error.clear();
  return MK_OK;
}

const char* mk_last_error(const mk_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

mk_status mk_run(mk_context* ctx, const char* command, const char* args_json, mk_result** out) {
  if (!ctx || !command || !out) return MK_ERR_USAGE;
  *out = nullptr;
  Handler h = find_handler(command);
  if (!h) {
    ctx->error = std::string("unknown command '") + command + "'";
    return MK_ERR_USAGE;
  }
  return guarded(ctx, [&] {
    json args = args_json && *args_json ? json::parse(args_json) : json::object();
    if (!args.is_object()) throw ParseError("arguments must be a JSON object");
    json result = h(*ctx, args);
    *out = new mk_result{result.dump()};
  });
}

const char* mk_result_json(const mk_result* result) { return result ? result->text.c_str() : ""; }

void mk_result_free(mk_result* result) { delete result; }

mk_status mk_equation_parse(mk_context* ctx, const char* text, mk_equation** out) {
  if (!ctx || !text || !out) return MK_ERR_USAGE;
  *out = nullptr;
  return guarded(ctx, [&] { *out = new mk_equation{Equation::parse(text)}; });
}

void mk_equation_free(mk_equation* eq) { delete eq; }

mk_status mk_equation_is_solution(mk_context* ctx, const mk_equation* eq, const char* m, const char* m1,
                                  const char* m2, int* is_solution) {
  if (!ctx || !eq || !m || !m1 || !m2 || !is_solution) return MK_ERR_USAGE;
  return guarded(ctx, [&] {
    Triple t{parse_bigint(m), parse_bigint(m1), parse_bigint(m2)};
    *is_solution = markoff::is_solution(eq->eq, t) ? 1 : 0;
  });
}

mk_status mk_equation_format(const mk_equation* eq, char* buf, size_t size, size_t* needed) {
  if (!eq) return MK_ERR_USAGE;
  std::string s = jequation(eq->eq)["literal"].get<std::string>();
  if (needed) *needed = s.size() + 1;
  if (buf && size > 0) {
    std::size_t n = std::min(size - 1, s.size());
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
  }
  return MK_OK;
}

}  // extern "C"
