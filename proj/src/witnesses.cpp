#include "dtg/witnesses.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "dtg/error.hpp"
#include "dtg/field.hpp"
#include "dtg/formed_space.hpp"

namespace dtg {

namespace {

// rows: left factor, then the products with 1, 2, x, 1+x, 2+x, 2x, 1+2x, 2+2x
const char* const kGf9Mul[8] = {
    "1 1 2 x 1+x 2+x 2x 1+2x 2+2x",
    "2 2 1 2x 2+2x 1+2x x 2+x 1+x",
    "x x 2x 2 2+x 2+2x 1 1+x 1+2x",
    "1+x 1+x 2+2x 2+x 2x 1 1+2x 2 x",
    "2+x 2+x 1+2x 2+2x 1 x 1+x 2x 2",
    "2x 2x x 1 1+2x 1+x 2 2+2x 2+x",
    "1+2x 1+2x 2+x 1+x 2 2x 2+2x x 1",
    "2+2x 2+2x 1+x 1+2x x 2 2+x 1 2x",
};
// rows: left summand 1, λ, ..., λ^14, then the sums with 0, 1, λ, ..., λ^14
const char* const kGf16Add[15] = {
    "1 1 0 λ^4 λ^8 λ^14 λ λ^10 λ^13 λ^9 λ^2 λ^7 λ^5 λ^12 λ^11 λ^6 λ^3",
    "λ λ λ^4 0 λ^5 λ^9 1 λ^2 λ^11 λ^14 λ^10 λ^3 λ^8 λ^6 λ^13 λ^12 λ^7",
    "λ^2 λ^2 λ^8 λ^5 0 λ^6 λ^10 λ λ^3 λ^12 1 λ^11 λ^4 λ^9 λ^7 λ^14 λ^13",
    "λ^3 λ^3 λ^14 λ^9 λ^6 0 λ^7 λ^11 λ^2 λ^4 λ^13 λ λ^12 λ^5 λ^10 λ^8 1",
    "λ^4 λ^4 λ 1 λ^10 λ^7 0 λ^8 λ^12 λ^3 λ^5 λ^14 λ^2 λ^13 λ^6 λ^11 λ^9",
    "λ^5 λ^5 λ^10 λ^2 λ λ^11 λ^8 0 λ^9 λ^13 λ^4 λ^6 1 λ^3 λ^14 λ^7 λ^12",
    "λ^6 λ^6 λ^13 λ^11 λ^3 λ^2 λ^12 λ^9 0 λ^10 λ^14 λ^5 λ^7 λ λ^4 1 λ^8",
    "λ^7 λ^7 λ^9 λ^14 λ^12 λ^4 λ^3 λ^13 λ^10 0 λ^11 1 λ^6 λ^8 λ^2 λ^5 λ",
    "λ^8 λ^8 λ^2 λ^10 1 λ^13 λ^5 λ^4 λ^14 λ^11 0 λ^12 λ λ^7 λ^9 λ^3 λ^6",
    "λ^9 λ^9 λ^7 λ^3 λ^11 λ λ^14 λ^6 λ^5 1 λ^12 0 λ^13 λ^2 λ^8 λ^10 λ^4",
    "λ^10 λ^10 λ^5 λ^8 λ^4 λ^12 λ^2 1 λ^7 λ^6 λ λ^13 0 λ^14 λ^3 λ^9 λ^11",
    "λ^11 λ^11 λ^12 λ^6 λ^9 λ^5 λ^13 λ^3 λ λ^8 λ^7 λ^2 λ^14 0 1 λ^4 λ^10",
    "λ^12 λ^12 λ^11 λ^13 λ^7 λ^10 λ^6 λ^14 λ^4 λ^2 λ^9 λ^8 λ^3 1 0 λ λ^5",
    "λ^13 λ^13 λ^6 λ^12 λ^14 λ^8 λ^11 λ^7 1 λ^5 λ^3 λ^10 λ^9 λ^4 λ 0 λ^2",
    "λ^14 λ^14 λ^3 λ^7 λ^13 1 λ^9 λ^12 λ^8 λ λ^6 λ^4 λ^11 λ^10 λ^5 λ^2 0",
};

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

// one witness block: a space, named vectors and the claims made about them
struct Block {
  std::string id;
  std::string location;
  FormedSpace space;
  std::map<std::string, Vec> vecs;
  int delta = 0;  // adjacency class of the orbital graph under discussion (0: none)
};

Vec lookup(const Block& b, const std::string& name) {
  auto it = b.vecs.find(name);
  if (it != b.vecs.end()) return it->second;
  return b.space.parse_vector(name);  // basis vectors such as e1, d, t
}

int parse_signed(const Field& F, const std::string& s) {
  if (!s.empty() && s[0] == '-') return F.neg(F.parse(s.substr(1)));
  return F.parse(s);
}

// "b(u,v)" or "Q(u)" = printed value
void identity(Report& r, const Block& b, const std::string& expr, const std::string& value) {
  const Field& F = b.space.field();
  std::string id = b.id + "." + expr;
  run_case(r, id, b.location, [&] {
    int got;
    auto open = expr.find('('), close = expr.rfind(')');
    std::string fn = expr.substr(0, open), args = expr.substr(open + 1, close - open - 1);
    if (fn == "Q") {
      got = b.space.Q(lookup(b, args));
    } else {
      auto comma = args.find(',');
      got = b.space.beta(lookup(b, args.substr(0, comma)), lookup(b, args.substr(comma + 1)));
    }
    int want = parse_signed(F, value);
    r.check(id, b.location, b.space.elem_str(got), b.space.elem_str(want));
  });
}

// for z = k*P + l*R over all k, l:  b(A, z) = ck*k^s + cl*l^s  (s = q, the conjugation exponent)
void z_identity(Report& r, const Block& b, const std::string& A, const std::string& P, const std::string& R,
                const std::string& ck, const std::string& cl) {
  const Field& F = b.space.field();
  std::string id = b.id + ".b(" + A + ",k" + P + "+l" + R + ")";
  run_case(r, id, b.location, [&] {
    Vec a = lookup(b, A), p = lookup(b, P), q = lookup(b, R);
    int cK = F.parse(ck), cL = F.parse(cl);
    int bad = 0;
    for (int k = 0; k < F.q(); ++k)
      for (int l = 0; l < F.q(); ++l) {
        Vec z = b.space.add(b.space.scale(k, p), b.space.scale(l, q));
        int lhs = b.space.beta(a, z);
        int rhs = F.add(F.mul(cK, F.pow(k, b.space.q())), F.mul(cL, F.pow(l, b.space.q())));
        if (lhs != rhs) ++bad;
      }
    auto& c = r.check(id, b.location, bad, 0, "stated");
    c.note = "mismatching (k,l) pairs out of " + std::to_string(F.q() * F.q());
  });
}

// b(A, z) = c * b(B, z) for every z in <P, R>
void z_ratio(Report& r, const Block& b, const std::string& A, const std::string& B, const std::string& P,
             const std::string& R, const std::string& c) {
  const Field& F = b.space.field();
  std::string id = b.id + ".b(" + A + ",z)=" + c + "*b(" + B + ",z)";
  run_case(r, id, b.location, [&] {
    Vec a = lookup(b, A), bb = lookup(b, B), p = lookup(b, P), q = lookup(b, R);
    int cc = F.parse(c), bad = 0;
    for (int k = 0; k < F.q(); ++k)
      for (int l = 0; l < F.q(); ++l) {
        Vec z = b.space.add(b.space.scale(k, p), b.space.scale(l, q));
        if (b.space.beta(a, z) != F.mul(cc, b.space.beta(bb, z))) ++bad;
      }
    r.check(id, b.location, bad, 0, "stated");
  });
}

// (<x>,<y>,<z>) is a 2-geodesic of the orbital graph of class b.delta
void geodesic(Report& r, const Block& b, const std::string& x, const std::string& y, const std::string& z) {
  std::string id = b.id + ".geodesic(" + x + "," + y + "," + z + ")";
  run_case(r, id, b.location, [&] {
    Vec u = lookup(b, x), v = lookup(b, y), w = lookup(b, z);
    int uv = suborbit_of(b.space, u, v), vw = suborbit_of(b.space, v, w), uw = suborbit_of(b.space, u, w);
    bool ok = uv == b.delta && vw == b.delta && uw != b.delta;
    json got = {{"class(" + x + "," + y + ")", uv}, {"class(" + y + "," + z + ")", vw}, {"class(" + x + "," + z + ")", uw}};
    auto& c = r.check(id, b.location, ok, true);
    c.computed = got;
    c.expected = "adjacent, adjacent, non-adjacent (class " + std::to_string(b.delta) + ")";
    c.note = ok ? "" : "not a 2-geodesic";
  });
}

// <x> lies in the stated class relative to <u>
void in_class(Report& r, const Block& b, const std::string& x, int stated, const std::string& note = "") {
  std::string id = b.id + ".class(u," + x + ")";
  run_case(r, id, b.location, [&] {
    int got = suborbit_of(b.space, lookup(b, "u"), lookup(b, x));
    auto& c = r.check(id, b.location, got, stated, "stated", true);
    if (got != stated) c.note = note;
  });
}

// <x,y> non-degenerate: radical trivial, and V = W + W^perp (both tests must agree)
void nondegenerate(Report& r, const Block& b, const std::string& x, const std::string& y) {
  std::string id = b.id + ".nondegenerate<" + x + "," + y + ">";
  run_case(r, id, b.location, [&] {
    Vec u = lookup(b, x), w = lookup(b, y);
    bool rad = span_radical_trivial(b.space, u, w), comp = span_complemented(b.space, u, w);
    auto& c = r.check(id, b.location, json{{"radical_trivial", rad}, {"V=W+W^perp", comp}},
                      json{{"radical_trivial", true}, {"V=W+W^perp", true}});
    if (rad != comp) c.note = "the two non-degeneracy tests disagree";
  });
}

// <x,y> degenerate with radical exactly <rad>
void degenerate(Report& r, const Block& b, const std::string& x, const std::string& y, const std::string& rad) {
  std::string id = b.id + ".radical<" + x + "," + y + ">";
  run_case(r, id, b.location, [&] {
    Vec u = lookup(b, x), w = lookup(b, y);
    auto got = span_radical(b.space, u, w);
    Vec gen;
    {
      // rad is written as "x+c*y"
      auto plus = rad.find('+');
      std::string cstr = rad.substr(plus + 1, rad.size() - plus - 1 - y.size());
      gen = b.space.add(u, b.space.scale(b.space.field().parse(cstr), w));
    }
    std::vector<Vec> want;
    for (int k = 0; k < b.space.field().q(); ++k) want.push_back(b.space.scale(k, gen));
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    bool comp = span_complemented(b.space, u, w);
    auto& c = r.check(id, b.location, json{{"radical_is_<" + rad + ">", got == want}, {"V=W+W^perp", comp}},
                      json{{"radical_is_<" + rad + ">", true}, {"V=W+W^perp", false}});
    c.note = "radical has " + std::to_string(got.size()) + " vectors";
  });
}

Block block(const std::string& id, const std::string& loc, FormedSpace s, int delta,
            const std::vector<std::pair<std::string, std::string>>& vecs) {
  Block b{id, loc, std::move(s), {}, delta};
  for (const auto& [name, text] : vecs) b.vecs[name] = b.space.parse_vector(text);
  return b;
}

void unitary_q3(Report& r) {
  auto S = FormedSpace::unitary(4, 3);
  const std::string U = "e1+2e2+f2";
  auto base = block("lemmas.U3", "unitary space over GF(9), base point", S, 0, {{"u", U}});
  identity(r, base, "b(u,u)", "1");
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      std::string ei = "e" + std::to_string(i), fj = "f" + std::to_string(j);
      identity(r, base, "b(" + ei + "," + fj + ")", i == j ? "1" : "0");
    }

  auto d1 = block("lemmas.U3.D1", "unitary q=3, adjacency class 1", S, 1,
                  {{"u", U},
                   {"v1", "(1+2x)e1+2e2+2xf1+(2+2x)f2"},
                   {"v2", "xe1+e2+(2+2x)f1+2xf2"},
                   {"w1", "2e1+xe2+(1+x)f1+2f2"},
                   {"w2", "(1+x)e1+e2+xf1+(1+2x)f2"}});
  for (std::string i : {"1", "2"}) {
    identity(r, d1, "b(u,v" + i + ")", "0");
    identity(r, d1, "b(v" + i + ",w" + i + ")", "0");
    identity(r, d1, "b(v" + i + ",v" + i + ")", "1");
    identity(r, d1, "b(w" + i + ",w" + i + ")", "1");
  }
  identity(r, d1, "b(u,w1)", "2+x");
  identity(r, d1, "b(u,w2)", "x");
  z_identity(r, d1, "u", "u", "w1", "1", "2+x");
  z_identity(r, d1, "w1", "u", "w1", "2+2x", "1");
  z_identity(r, d1, "u", "u", "w2", "1", "x");
  z_identity(r, d1, "w2", "u", "w2", "2x", "1");
  z_ratio(r, d1, "w2", "u", "u", "w2", "2x");
  geodesic(r, d1, "u", "v1", "w1");
  geodesic(r, d1, "u", "v2", "w2");
  nondegenerate(r, d1, "u", "w1");
  degenerate(r, d1, "u", "w2", "u+2xw2");
  in_class(r, d1, "w1", 3);
  in_class(r, d1, "w2", 2);
  run_case(r, "lemmas.U3.D1.diameter", d1.location, [&] {
    auto p = enumerate_points(S);
    auto g = geometric_orbital_graph(S, p, 1);
    r.check("lemmas.U3.D1.diameter", d1.location, json{{"points", p.points.size()}, {"diameter", diameter(g)}},
            json{{"points", 540}, {"diameter", 2}});
  });

  auto d2 = block("lemmas.U3.D2", "unitary q=3, adjacency class 2", S, 2,
                  {{"u", U}, {"v", "(1+x)e1+e2+xf1+(1+2x)f2"}, {"w", "(2+2x)e1+f1+f2"}});
  identity(r, d2, "b(v,v)", "1");
  identity(r, d2, "b(w,w)", "1");
  identity(r, d2, "b(v,w)", "1");
  identity(r, d2, "b(u,w)", "0");
  identity(r, d2, "b(u,v)", "x");
  z_identity(r, d2, "u", "u", "v", "1", "x");
  z_identity(r, d2, "v", "u", "v", "2x", "1");
  z_ratio(r, d2, "v", "u", "u", "v", "2x");
  z_identity(r, d2, "v", "v", "w", "1", "1");
  z_identity(r, d2, "w", "v", "w", "1", "1");
  degenerate(r, d2, "u", "v", "u+2xv");
  degenerate(r, d2, "v", "w", "v+2w");
  geodesic(r, d2, "u", "v", "w");
  in_class(r, d2, "w", 1);

  auto d3 = block("lemmas.U3.D3", "unitary q=3, adjacency class 3", S, 3,
                  {{"u", U}, {"v", "(2+2x)e1+(2+2x)f1+f2"}, {"w", "(2+2x)e1+f1+f2"}});
  identity(r, d3, "b(v,v)", "1");
  identity(r, d3, "b(w,w)", "1");
  identity(r, d3, "b(u,w)", "0");
  identity(r, d3, "b(u,v)", "1+x");
  identity(r, d3, "b(v,w)", "1+2x");
  z_identity(r, d3, "u", "u", "v", "1", "1+x");
  z_identity(r, d3, "v", "u", "v", "1+2x", "1");
  z_identity(r, d3, "v", "v", "w", "1", "1+2x");
  z_identity(r, d3, "w", "v", "w", "1+x", "1");
  nondegenerate(r, d3, "u", "v");
  nondegenerate(r, d3, "v", "w");
  geodesic(r, d3, "u", "v", "w");
  in_class(r, d3, "w", 1);
  run_case(r, "lemmas.U3.cubes-nonzero", "GF(9)", [&] {
    const Field& F = S.field();
    int zero = 0;
    for (int a = 1; a < F.q(); ++a)
      if (F.pow(a, 3) == 0) ++zero;
    r.check("lemmas.U3.cubes-nonzero", "GF(9)", zero, 0, "stated");
  });
}

void unitary_q4(Report& r) {
  auto S = FormedSpace::unitary(4, 4);
  const std::string U = "e1+e2+λf1";
  auto base = block("lemmas.U4", "unitary space over GF(16), base point", S, 0, {{"u", U}});
  identity(r, base, "b(u,u)", "1");
  run_case(r, "lemmas.U4.λ^4+λ", base.location, [&] {
    const Field& F = S.field();
    int l = F.parse("λ");
    r.check("lemmas.U4.λ^4+λ", base.location, S.elem_str(F.add(F.pow(l, 4), l)), "1");
  });
  run_case(r, "lemmas.U4.λ-primitive", base.location, [&] {
    const Field& F = S.field();
    int l = F.parse("λ"), ord = 1;
    for (int a = l; a != 1; a = F.mul(a, l)) ++ord;
    r.check("lemmas.U4.λ-primitive", base.location, ord, 15);
  });
  auto d1 = block("lemmas.U4.D1", "unitary q=4, adjacency class 1", S, 1,
                  {{"u", U},
                   {"v", "λ^7e1+λ^14e2+λ^7f1+λ^8f2"},
                   {"w", "λ^10e1+λ^4e2+λ^3f1+λ^11f2"}});
  identity(r, d1, "b(v,v)", "1");
  identity(r, d1, "b(w,w)", "1");
  identity(r, d1, "b(u,v)", "0");
  identity(r, d1, "b(v,w)", "0");
  identity(r, d1, "b(u,w)", "λ^3");
  geodesic(r, d1, "u", "v", "w");
  in_class(r, d1, "w", 2);
  auto d2 = block("lemmas.U4.D2", "unitary q=4, adjacency class 2", S, 2,
                  {{"u", U}, {"v", "λ^6e1+e2+λ^5f1+λ^7f2"}, {"w", "λ^12e1+λ^3e2+λ^4f1+f2"}});
  identity(r, d2, "b(v,v)", "1");
  identity(r, d2, "b(w,w)", "1");
  identity(r, d2, "b(u,v)", "λ^6");
  identity(r, d2, "b(v,w)", "λ^6");
  identity(r, d2, "b(u,w)", "0");
  geodesic(r, d2, "u", "v", "w");
  in_class(r, d2, "w", 1);
}

void orthogonal(Report& r) {
  // odd dimension, q = 5
  auto S1 = FormedSpace::orthogonal(7, 5, "circle");
  const std::string U1 = "4e1+3e2+3e3+3f1+2f2+3d";
  auto b1 = block("lemmas.O1", "orthogonal 2m+1, q=5, base point", S1, 0, {{"u", U1}});
  identity(r, b1, "b(d,d)", "4");
  identity(r, b1, "Q(d)", "2");
  run_case(r, "lemmas.O1.Q(d)-nonsquare", b1.location, [&] {
    r.check("lemmas.O1.Q(d)-nonsquare", b1.location, S1.field().is_square(S1.Q(S1.parse_vector("d"))), false);
  });
  identity(r, b1, "b(u,u)", "2");
  identity(r, b1, "Q(u)", "1");
  auto o1a = block("lemmas.O1.D1", "orthogonal 2m+1, q=5, adjacency class 1", S1, 1,
                   {{"u", U1}, {"v", "3e1+e2+e3+4f1+2f3+d"}, {"w", "3e1+e3+f1+f2+f3+4d"}});
  identity(r, o1a, "Q(v)", "1");
  identity(r, o1a, "Q(w)", "1");
  identity(r, o1a, "b(u,v)", "0");
  identity(r, o1a, "b(v,w)", "0");
  identity(r, o1a, "b(u,w)", "2");
  geodesic(r, o1a, "u", "v", "w");
  in_class(r, o1a, "w", 3);
  auto o1c = block("lemmas.O1.D3", "orthogonal 2m+1, q=5, adjacency class 3", S1, 3,
                   {{"u", U1}, {"x", "e1+4e2+2e3+2f1+4f2+3f3+4d"}, {"y", "3e1+e2+e3+4f1+2f3+d"}});
  identity(r, o1c, "Q(x)", "1");
  identity(r, o1c, "Q(y)", "1");
  identity(r, o1c, "b(u,x)", "-2");
  identity(r, o1c, "b(x,y)", "2");
  identity(r, o1c, "b(u,y)", "0");
  geodesic(r, o1c, "u", "x", "y");
  in_class(r, o1c, "y", 1);

  // plus type, q = 4
  auto S24 = FormedSpace::orthogonal(6, 4, "plus");
  const std::string U24 = "e1+λe2+λf1+λf2+λf3";
  auto f4 = block("lemmas.O2q4", "orthogonal plus type, q=4, field rules", S24, 0, {{"u", U24}});
  run_case(r, "lemmas.O2q4.GF(4)-addition", f4.location, [&] {
    const Field& F = S24.field();
    const char* rules[][3] = {{"1", "1", "0"},   {"1", "λ", "λ^2"}, {"1", "λ^2", "λ"},
                              {"λ", "λ", "0"},   {"λ", "λ^2", "1"}, {"λ^2", "λ^2", "0"}};
    int bad = 0;
    for (auto& rule : rules)
      if (F.add(F.parse(rule[0]), F.parse(rule[1])) != F.parse(rule[2])) ++bad;
    r.check("lemmas.O2q4.GF(4)-addition", f4.location, bad, 0);
  });
  identity(r, f4, "Q(u)", "1");
  identity(r, f4, "Q(e1)", "0");
  identity(r, f4, "Q(f3)", "0");
  auto o24a = block("lemmas.O2q4.D1", "orthogonal plus type, q=4, adjacency class 1", S24, 1,
                    {{"u", U24}, {"v", "λe1+λe2+λ^2e3+λ^2f2"}, {"w", "e1+e2+f1+λf3"}});
  identity(r, o24a, "Q(v)", "1");
  identity(r, o24a, "Q(w)", "1");
  identity(r, o24a, "b(u,v)", "0");
  identity(r, o24a, "b(v,w)", "0");
  identity(r, o24a, "b(u,w)", "1");
  geodesic(r, o24a, "u", "v", "w");
  in_class(r, o24a, "w", 2);
  auto o24b = block("lemmas.O2q4.D2", "orthogonal plus type, q=4, adjacency class 2", S24, 2,
                    {{"u", U24}, {"x", "e1+e2+f1+λf3"}, {"y", "e1+λ^2e3+λf1+λ^2f2+f3"}});
  identity(r, o24b, "Q(x)", "1");
  identity(r, o24b, "Q(y)", "1");
  identity(r, o24b, "b(u,x)", "1");
  identity(r, o24b, "b(x,y)", "1");
  identity(r, o24b, "b(u,y)", "0");
  geodesic(r, o24b, "u", "x", "y");
  in_class(r, o24b, "y", 1);

  // plus type, q = 5
  auto S25 = FormedSpace::orthogonal(6, 5, "plus");
  const std::string U25 = "2e1+e2+4e3+3f1+2f2+2f3";
  auto o25a = block("lemmas.O2q5.D1", "orthogonal plus type, q=5, adjacency class 1", S25, 1,
                    {{"u", U25}, {"v", "4e1+3e2+4e3+f2+2f3"}, {"w", "3e2+4f1+2f2"}});
  identity(r, o25a, "Q(u)", "1");
  identity(r, o25a, "Q(v)", "1");
  identity(r, o25a, "Q(w)", "1");
  identity(r, o25a, "b(u,v)", "0");
  identity(r, o25a, "b(v,w)", "0");
  identity(r, o25a, "b(u,w)", "1");
  geodesic(r, o25a, "u", "v", "w");
  in_class(r, o25a, "w", 2);
  auto o25b = block("lemmas.O2q5.D2", "orthogonal plus type, q=5, adjacency class 2", S25, 2,
                    {{"u", U25}, {"x", "3e2+4f1+2f2"}, {"y", "e1+4e2+e3+f1+4f2+4f3"}});
  identity(r, o25b, "Q(x)", "1");
  identity(r, o25b, "Q(y)", "1");
  identity(r, o25b, "b(u,x)", "1");
  identity(r, o25b, "b(x,y)", "-1");
  identity(r, o25b, "b(u,y)", "0");
  geodesic(r, o25b, "u", "x", "y");
  in_class(r, o25b, "y", 1);

  // minus type, q = 4
  auto S34 = FormedSpace::orthogonal(6, 4, "minus");
  const std::string U34 = "e1+f2+d+λ^2t";
  auto b34 = block("lemmas.O3q4", "orthogonal minus type, q=4, basis and base point", S34, 0, {{"u", U34}});
  identity(r, b34, "Q(t)", "λ");
  identity(r, b34, "Q(d)", "1");
  identity(r, b34, "b(d,t)", "1");
  identity(r, b34, "b(d,d)", "0");
  identity(r, b34, "b(t,t)", "0");
  identity(r, b34, "b(e1,f1)", "1");
  identity(r, b34, "b(e1,d)", "0");
  identity(r, b34, "b(f1,t)", "0");
  identity(r, b34, "Q(u)", "1");
  auto o34a = block("lemmas.O3q4.D1", "orthogonal minus type, q=4, adjacency class 1", S34, 1,
                    {{"u", U34}, {"v", "λ^2e2+d+t+f1+f2"}, {"w", "e2+d+λt+f1+λ^2f2"}});
  identity(r, o34a, "Q(v)", "1");
  identity(r, o34a, "Q(w)", "1");
  identity(r, o34a, "b(u,v)", "0");
  identity(r, o34a, "b(v,w)", "0");
  identity(r, o34a, "b(u,w)", "1");
  geodesic(r, o34a, "u", "v", "w");
  in_class(r, o34a, "w", 3, "b(u,w)=1 puts w in class 2 under the class definitions; the text names class 3");
  auto o34b = block("lemmas.O3q4.D2", "orthogonal minus type, q=4, adjacency class 2", S34, 2,
                    {{"u", U34}, {"x", "e2+d+λt+f1+λ^2f2"}, {"y", "e1+e2+d+t+λ^2f1"}});
  identity(r, o34b, "Q(x)", "1");
  identity(r, o34b, "Q(y)", "1");
  identity(r, o34b, "b(u,x)", "1");
  identity(r, o34b, "b(x,y)", "1");
  identity(r, o34b, "b(u,y)", "0");
  geodesic(r, o34b, "u", "x", "y");
  in_class(r, o34b, "y", 1);

  // minus type, q = 5
  auto S35 = FormedSpace::orthogonal(6, 5, "minus");
  const std::string U35 = "4e1+3d+t+3f2";
  auto b35 = block("lemmas.O3q5", "orthogonal minus type, q=5, basis and base point", S35, 0, {{"u", U35}});
  identity(r, b35, "b(d,t)", "4");
  identity(r, b35, "b(d,d)", "3");
  identity(r, b35, "b(t,t)", "1");
  identity(r, b35, "b(e1,f1)", "1");
  identity(r, b35, "b(e1,d)", "0");
  identity(r, b35, "b(f1,t)", "0");
  identity(r, b35, "Q(u)", "1");
  auto o35a = block("lemmas.O3q5.D1", "orthogonal minus type, q=5, adjacency class 1", S35, 1,
                    {{"u", U35}, {"v", "4e1+d+3f1+2f2"}, {"w", "2e1+e2+4d+2t+3f1+2f2"}});
  identity(r, o35a, "Q(v)", "1");
  identity(r, o35a, "Q(w)", "1");
  identity(r, o35a, "b(u,v)", "0");
  identity(r, o35a, "b(v,w)", "0");
  identity(r, o35a, "b(u,w)", "3");
  geodesic(r, o35a, "u", "v", "w");
  in_class(r, o35a, "w", 3);
  auto o35c = block("lemmas.O3q5.D3", "orthogonal minus type, q=5, adjacency class 3", S35, 3,
                    {{"u", U35}, {"x", "2e1+3d+2t+2f1"}, {"y", "3e2+4f1+2f2"}});
  identity(r, o35c, "Q(x)", "1");
  identity(r, o35c, "Q(y)", "1");
  identity(r, o35c, "b(u,x)", "3");
  identity(r, o35c, "b(x,y)", "3");
  identity(r, o35c, "b(u,y)", "0");
  geodesic(r, o35c, "u", "x", "y");
  in_class(r, o35c, "y", 1);
}

}  // namespace

Report verify_field_tables() {
  Report r;
  r.suite = "field-tables";
  const Field& F9 = Field::get(9);
  const char* cols9[] = {"1", "2", "x", "1+x", "2+x", "2x", "1+2x", "2+2x"};
  for (int i = 0; i < 8; ++i) {
    auto cells = split_ws(kGf9Mul[i]);
    for (int j = 0; j < 8; ++j) {
      std::string id = "tables.GF9." + cells[0] + "*" + cols9[j];
      run_case(r, id, "GF(9) multiplication table", [&] {
        int got = F9.mul(F9.parse(cells[0]), F9.parse(cols9[j]));
        r.check(id, "GF(9) multiplication table", F9.poly_str(got), F9.poly_str(F9.parse(cells[j + 1])));
      });
    }
  }
  const Field& F16 = Field::get(16);
  std::vector<std::string> cols16 = {"0", "1"};
  for (int k = 1; k <= 14; ++k) cols16.push_back(k == 1 ? "λ" : "λ^" + std::to_string(k));
  for (int i = 0; i < 15; ++i) {
    auto cells = split_ws(kGf16Add[i]);
    for (int j = 0; j < 16; ++j) {
      std::string id = "tables.GF16." + cells[0] + "+" + cols16[j];
      run_case(r, id, "GF(16) addition table", [&] {
        int got = F16.add(F16.parse(cells[0]), F16.parse(cols16[j]));
        r.check(id, "GF(16) addition table", F16.power_str(got), F16.power_str(F16.parse(cells[j + 1])));
      });
    }
  }
  return r;
}

Report verify_witnesses() {
  Report r;
  r.suite = "lemmas";
  unitary_q3(r);
  unitary_q4(r);
  orthogonal(r);
  return r;
}

}  // namespace dtg
