#include "dissect/dsl.hpp"

#include <cctype>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "dissect/duality.hpp"
#include "dissect/verify.hpp"

namespace dissect {
namespace dsl {

namespace {

struct Token {
  enum Kind { Ident, Number, Symbol, End } kind = End;
  std::string text;
  Pos pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip();
    Token t;
    t.pos = pos_;
    if (i_ >= text_.size()) return t;
    char c = text_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Ident;
      while (i_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
                                   text_[i_] == '_'))
        t.text += advance();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Number;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
        t.text += advance();
      if (i_ < text_.size() && text_[i_] == '/') {
        t.text += advance();
        if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
          throw ParseError("expected digits after '/'", pos_);
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
          t.text += advance();
      }
      return t;
    }
    if (std::string("=(){},;+-").find(c) != std::string::npos) {
      t.kind = Token::Symbol;
      t.text = advance();
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

 private:
  char advance() {
    char c = text_[i_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.col = 1;
    } else {
      ++pos_.col;
    }
    return c;
  }
  void skip() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  const std::string& text_;
  std::size_t i_ = 0;
  Pos pos_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { cur_ = lex_.next(); }

  SpecFile parse() {
    SpecFile f;
    while (cur_.kind != Token::End) f.statements.push_back(statement());
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, cur_.pos); }

  Token eat() {
    Token t = cur_;
    cur_ = lex_.next();
    return t;
  }
  bool at_ident(const std::string& kw) const {
    return cur_.kind == Token::Ident && cur_.text == kw;
  }
  void expect_symbol(char c) {
    if (cur_.kind != Token::Symbol || cur_.text[0] != c)
      fail(std::string("expected '") + c + "'");
    eat();
  }
  void expect_keyword(const std::string& kw) {
    if (!at_ident(kw)) fail("expected '" + kw + "'");
    eat();
  }
  std::string name() {
    if (cur_.kind != Token::Ident) fail("expected a name");
    return eat().text;
  }
  std::size_t nat() {
    if (cur_.kind != Token::Number || cur_.text.find('/') != std::string::npos)
      fail("expected a natural number");
    return std::stoull(eat().text);
  }
  Rational rational() {
    bool neg = false;
    if (cur_.kind == Token::Symbol && cur_.text == "-") {
      neg = true;
      eat();
    }
    if (cur_.kind != Token::Number) fail("expected a rational literal");
    Rational r = parse_rational(eat().text);
    return neg ? -r : r;
  }

  Statement statement() {
    Statement s;
    s.pos = cur_.pos;
    if (at_ident("algebra")) {
      eat();
      s.kind = Statement::Algebra;
      s.name = name();
      expect_symbol('=');
      s.alg = algebra_expr();
    } else if (at_ident("involution")) {
      eat();
      s.kind = Statement::Involution;
      s.name = name();
      expect_keyword("on");
      s.on = name();
      expect_symbol('=');
      s.inv = inv_expr();
    } else {
      s.kind = Statement::Cmd;
      s.cmd = command();
    }
    return s;
  }

  AlgebraExpr algebra_expr() {
    AlgebraExpr a;
    if (at_ident("so")) {
      eat();
      a.kind = AlgebraExpr::So;
      expect_symbol('(');
      a.p = nat();
      expect_symbol(',');
      a.q = nat();
      expect_symbol(')');
    } else if (at_ident("sl2R")) {
      eat();
      a.kind = AlgebraExpr::Sl2R;
    } else if (at_ident("su2")) {
      eat();
      a.kind = AlgebraExpr::Su2;
    } else if (at_ident("sl2C")) {
      eat();
      a.kind = AlgebraExpr::Sl2C;
    } else if (at_ident("sum")) {
      eat();
      a.kind = AlgebraExpr::Sum;
      expect_symbol('(');
      a.left = name();
      expect_symbol(',');
      a.right = name();
      expect_symbol(')');
    } else if (at_ident("constants")) {
      eat();
      a.kind = AlgebraExpr::Constants;
      expect_symbol('{');
      while (!(cur_.kind == Token::Symbol && cur_.text == "}")) {
        std::size_t i = nat(), j = nat(), k = nat();
        Rational c = rational();
        expect_symbol(';');
        a.triples.emplace_back(i, j, k, c);
      }
      expect_symbol('}');
    } else {
      fail("expected an algebra constructor");
    }
    return a;
  }

  InvExpr inv_expr() {
    InvExpr v;
    if (at_ident("reflect")) {
      eat();
      v.kind = InvExpr::Reflect;
      v.index = nat();
    } else if (at_ident("signs")) {
      eat();
      v.kind = InvExpr::Signs;
      expect_symbol('(');
      while (cur_.kind == Token::Symbol && (cur_.text == "+" || cur_.text == "-"))
        v.signs.push_back(eat().text == "+" ? 1 : -1);
      if (v.signs.empty()) fail("expected a sign pattern");
      expect_symbol(')');
    } else if (at_ident("flip")) {
      eat();
      v.kind = InvExpr::Flip;
    } else if (at_ident("swap_twist")) {
      eat();
      v.kind = InvExpr::SwapTwist;
      expect_symbol('(');
      v.ref = name();
      expect_symbol(')');
    } else if (at_ident("matrix")) {
      eat();
      v.kind = InvExpr::MatrixLit;
      expect_symbol('{');
      while (!(cur_.kind == Token::Symbol && cur_.text == "}")) {
        Vec row;
        while (!(cur_.kind == Token::Symbol && cur_.text == ";")) row.push_back(rational());
        expect_symbol(';');
        v.rows.push_back(std::move(row));
      }
      expect_symbol('}');
    } else {
      fail("expected an involution constructor");
    }
    return v;
  }

  Command command() {
    Command c;
    if (at_ident("check")) {
      eat();
      expect_keyword("dissecting");
      c.kind = Command::CheckDissecting;
      c.names.push_back(name());
      c.names.push_back(name());
    } else if (at_ident("dual")) {
      eat();
      if (at_ident("cartan")) {
        eat();
        c.kind = Command::DualCartan;
      } else if (at_ident("compact")) {
        eat();
        c.kind = Command::DualCompact;
      } else {
        fail("expected 'cartan' or 'compact'");
      }
      c.names.push_back(name());
      while (at_ident("with")) {
        eat();
        c.names.push_back(name());
      }
    } else if (at_ident("classify")) {
      eat();
      c.kind = Command::Classify;
      expect_keyword("so");
      expect_symbol('(');
      c.p = nat();
      expect_symbol(',');
      c.q = nat();
      expect_symbol(')');
    } else if (at_ident("verify")) {
      eat();
      expect_keyword("paper");
      c.kind = Command::VerifyPaper;
      c.n = nat();
    } else {
      fail("expected a statement or command");
    }
    return c;
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

SpecFile parse_spec(const std::string& text) {
  Parser p(text);
  SpecFile f = p.parse();
  f.source = text;
  return f;
}

std::string pretty_print(const SpecFile& f) {
  std::ostringstream os;
  for (const auto& s : f.statements) {
    switch (s.kind) {
      case Statement::Algebra: {
        os << "algebra " << s.name << " = ";
        const AlgebraExpr& a = s.alg;
        switch (a.kind) {
          case AlgebraExpr::So: os << "so(" << a.p << "," << a.q << ")"; break;
          case AlgebraExpr::Sl2R: os << "sl2R"; break;
          case AlgebraExpr::Su2: os << "su2"; break;
          case AlgebraExpr::Sl2C: os << "sl2C"; break;
          case AlgebraExpr::Sum: os << "sum(" << a.left << "," << a.right << ")"; break;
          case AlgebraExpr::Constants: {
            os << "constants {";
            for (const auto& [i, j, k, c] : a.triples)
              os << " " << i << " " << j << " " << k << " " << to_string(c) << ";";
            os << " }";
            break;
          }
        }
        break;
      }
      case Statement::Involution: {
        os << "involution " << s.name << " on " << s.on << " = ";
        const InvExpr& v = s.inv;
        switch (v.kind) {
          case InvExpr::Reflect: os << "reflect " << v.index; break;
          case InvExpr::Signs: {
            os << "signs(";
            for (int x : v.signs) os << (x > 0 ? '+' : '-');
            os << ")";
            break;
          }
          case InvExpr::Flip: os << "flip"; break;
          case InvExpr::SwapTwist: os << "swap_twist(" << v.ref << ")"; break;
          case InvExpr::MatrixLit: {
            os << "matrix {";
            for (const auto& row : v.rows) {
              for (const auto& r : row) os << " " << to_string(r);
              os << ";";
            }
            os << " }";
            break;
          }
        }
        break;
      }
      case Statement::Cmd: {
        const Command& c = s.cmd;
        switch (c.kind) {
          case Command::CheckDissecting:
            os << "check dissecting " << c.names[0] << " " << c.names[1];
            break;
          case Command::DualCartan:
          case Command::DualCompact:
            os << "dual " << (c.kind == Command::DualCartan ? "cartan" : "compact") << " "
               << c.names[0];
            for (std::size_t i = 1; i < c.names.size(); ++i) os << " with " << c.names[i];
            break;
          case Command::Classify: os << "classify so(" << c.p << "," << c.q << ")"; break;
          case Command::VerifyPaper: os << "verify paper " << c.n; break;
        }
        break;
      }
    }
    os << "\n";
  }
  return os.str();
}

namespace {

struct AlgBinding {
  AlgebraPtr g;
  std::optional<catalog::SoAlgebra> so;
};

std::string inertia_str(const Inertia& s) {
  return "(" + std::to_string(s.pos) + "," + std::to_string(s.neg) + "," +
         std::to_string(s.null) + ")";
}

AlgebraPtr build_constants(const AlgebraExpr& a, Pos pos) {
  std::size_t dim = 0;
  for (const auto& [i, j, k, c] : a.triples) dim = std::max({dim, i, j, k});
  if (dim == 0) throw ParseError("constants block is empty", pos);
  std::vector<std::vector<Vec>> c(dim, std::vector<Vec>(dim, zero_vec(dim)));
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto& [i, j, k, v] : a.triples) {
    if (i < 1 || j < 1 || k < 1) throw ParseError("constants indices are 1-based", pos);
    if (!seen.insert({i, j, k}).second)
      throw ParseError("duplicate structure constant entry", pos);
    if (!seen.insert({j, i, k}).second)
      throw ParseError("both orientations of a bracket given; list each pair once", pos);
    c[i - 1][j - 1][k - 1] += v;
    c[j - 1][i - 1][k - 1] -= v;
  }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= dim; ++i) labels.push_back("b" + std::to_string(i));
  return std::make_shared<LieAlgebra>(labels, c);
}

}  // namespace

ReportDocument run(const SpecFile& f, const RunOptions& opts) {
  ReportDocument doc;
  doc.version = tool_version();
  doc.input_digest = digest(f.source);
  std::map<std::string, AlgBinding> algs;
  std::map<std::string, Automorphism> invs;
  std::map<std::string, std::string> inv_alg;

  auto lookup_alg = [&](const std::string& n, Pos pos) -> AlgBinding& {
    auto it = algs.find(n);
    if (it == algs.end()) throw ParseError("unbound algebra name '" + n + "'", pos);
    return it->second;
  };
  auto lookup_inv = [&](const std::string& n, Pos pos) -> Automorphism& {
    auto it = invs.find(n);
    if (it == invs.end()) throw ParseError("unbound involution name '" + n + "'", pos);
    return it->second;
  };

  for (const auto& s : f.statements) {
    switch (s.kind) {
      case Statement::Algebra: {
        if (algs.count(s.name) || invs.count(s.name))
          throw ParseError("name '" + s.name + "' already bound", s.pos);
        AlgBinding b;
        try {
          switch (s.alg.kind) {
            case AlgebraExpr::So:
              b.so = catalog::so(s.alg.p, s.alg.q);
              b.g = b.so->algebra;
              break;
            case AlgebraExpr::Sl2R: b.g = catalog::sl2r(); break;
            case AlgebraExpr::Su2: b.g = catalog::su2(); break;
            case AlgebraExpr::Sl2C: b.g = catalog::sl2c_real(); break;
            case AlgebraExpr::Sum: {
              const AlgBinding& l = lookup_alg(s.alg.left, s.pos);
              const AlgBinding& r = lookup_alg(s.alg.right, s.pos);
              b.g = direct_sum(*l.g, *r.g);
              break;
            }
            case AlgebraExpr::Constants: b.g = build_constants(s.alg, s.pos); break;
          }
        } catch (const ParseError&) {
          throw;
        } catch (const std::exception& e) {
          throw ParseError(std::string("algebra construction failed: ") + e.what(), s.pos);
        }
        algs.emplace(s.name, std::move(b));
        break;
      }
      case Statement::Involution: {
        if (algs.count(s.name) || invs.count(s.name))
          throw ParseError("name '" + s.name + "' already bound", s.pos);
        AlgBinding& b = lookup_alg(s.on, s.pos);
        try {
          switch (s.inv.kind) {
            case InvExpr::Reflect: {
              if (!b.so) throw ParseError("'reflect' needs an so(p,q) algebra", s.pos);
              invs.emplace(s.name, catalog::reflection_involution(*b.so, s.inv.index));
              break;
            }
            case InvExpr::Signs: {
              if (!b.so) throw ParseError("'signs' needs an so(p,q) algebra", s.pos);
              invs.emplace(s.name, catalog::signature_involution(*b.so, s.inv.signs));
              break;
            }
            case InvExpr::Flip:
              invs.emplace(s.name, catalog::flip(b.g));
              break;
            case InvExpr::SwapTwist: {
              const Automorphism& inner = lookup_inv(s.inv.ref, s.pos);
              invs.emplace(s.name, catalog::swap_twist(b.g, inner.matrix()));
              break;
            }
            case InvExpr::MatrixLit: {
              std::size_t n = b.g->dim();
              if (s.inv.rows.size() != n)
                throw ParseError("matrix must have " + std::to_string(n) + " rows", s.pos);
              Matrix m(n, n);
              for (std::size_t i = 0; i < n; ++i) {
                if (s.inv.rows[i].size() != n)
                  throw ParseError("matrix row " + std::to_string(i + 1) + " must have " +
                                       std::to_string(n) + " entries",
                                   s.pos);
                for (std::size_t j = 0; j < n; ++j) m.at(i, j) = s.inv.rows[i][j];
              }
              Automorphism a = Automorphism::certify(b.g, m);
              if (!a.is_involution()) throw ParseError("matrix is not an involution", s.pos);
              invs.emplace(s.name, a);
              break;
            }
          }
        } catch (const ParseError&) {
          throw;
        } catch (const std::exception& e) {
          throw ParseError(std::string("involution construction failed: ") + e.what(), s.pos);
        }
        inv_alg[s.name] = s.on;
        break;
      }
      case Statement::Cmd: {
        const Command& c = s.cmd;
        auto t0 = std::chrono::steady_clock::now();
        VerificationReport rep;
        try {
          switch (c.kind) {
            case Command::CheckDissecting: {
              const Automorphism& t = lookup_inv(c.names[0], s.pos);
              const Automorphism& sg = lookup_inv(c.names[1], s.pos);
              rep.name = "check dissecting";
              rep.params = c.names[0] + " " + c.names[1];
              CommutingTriple tr(t, sg);
              QuadDecomposition quad = quad_decompose(tr);
              rep.pass = quad.q_m.dim() == 1;
              rep.witness = "dim q_m = " + std::to_string(quad.q_m.dim());
              TripleRecord rec;
              rec.algebra_id = inv_alg[c.names[0]];
              rec.tau_desc = c.names[0];
              rec.sigma_desc = c.names[1];
              rec.dim_hl = quad.h_l.dim();
              rec.dim_hm = quad.h_m.dim();
              rec.dim_ql = quad.q_l.dim();
              rec.dim_qm = quad.q_m.dim();
              rec.dissecting = rep.pass;
              if (rep.pass)
                rec.x0_type = classify_element(*tr.algebra(), primitive(quad.q_m.basis()[0]));
              doc.records.push_back(rec);
              break;
            }
            case Command::DualCartan: {
              if (c.names.size() < 2)
                throw ParseError("'dual cartan' needs at least one 'with' involution", s.pos);
              const AlgBinding& b = lookup_alg(c.names[0], s.pos);
              std::vector<Automorphism> extra;
              for (std::size_t i = 2; i < c.names.size(); ++i)
                extra.push_back(lookup_inv(c.names[i], s.pos));
              DualResult d = cartan_dual(b.g, lookup_inv(c.names[1], s.pos), extra);
              rep.name = "dual cartan";
              rep.params = c.names[0];
              rep.pass = true;
              rep.witness = "killing signature " + inertia_str(signature(d.algebra->killing()));
              break;
            }
            case Command::DualCompact: {
              if (c.names.size() != 4)
                throw ParseError(
                    "'dual compact' needs 'with theta with tau with sigma'", s.pos);
              const AlgBinding& b = lookup_alg(c.names[0], s.pos);
              DualResult d = compact_dual(b.g, lookup_inv(c.names[1], s.pos),
                                          lookup_inv(c.names[2], s.pos),
                                          lookup_inv(c.names[3], s.pos));
              Inertia sig = signature(d.algebra->killing());
              rep.name = "dual compact";
              rep.params = c.names[0];
              rep.pass = sig.pos == 0 && sig.null == 0;
              rep.witness = "killing signature " + inertia_str(sig);
              break;
            }
            case Command::Classify: {
              auto records = verify::enumerate_dissecting(c.p, c.q, opts.jobs);
              std::size_t found = 0;
              for (auto& r : records) found += r.dissecting;
              for (auto& r : records) doc.records.push_back(std::move(r));
              rep.name = "classify";
              rep.params = "so(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
              rep.pass = true;
              rep.witness = std::to_string(found) + " dissecting pairs";
              break;
            }
            case Command::VerifyPaper: {
              auto reports = verify::paper_suite(c.n, opts.jobs);
              bool all = true;
              for (auto& r : reports) {
                all = all && r.pass;
                doc.reports.push_back(std::move(r));
              }
              rep.name = "verify paper";
              rep.params = std::to_string(c.n);
              rep.pass = all;
              break;
            }
          }
        } catch (const ParseError&) {
          throw;
        } catch (const std::exception& e) {
          rep.pass = false;
          rep.witness = std::string("error: ") + e.what();
          if (rep.name.empty()) rep.name = "command";
        }
        rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
        doc.reports.push_back(rep);
        break;
      }
    }
  }
  doc.exit_status = 0;
  for (const auto& r : doc.reports)
    if (!r.pass) doc.exit_status = 1;
  return doc;
}

}  // namespace dsl
}  // namespace dissect
