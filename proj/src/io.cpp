#include "gmunn/io.hpp"

#include <fstream>
#include <sstream>

namespace gmunn::io {

namespace {

struct Reader {
  std::istream& in;
  int line_no = 0;

  explicit Reader(std::istream& in_) : in(in_) {}

  std::vector<std::string> next_tokens() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream ls(line);
      std::vector<std::string> tokens;
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return tokens;
    }
    fail(Errc::parse_error, "unexpected end of input");
  }

  void expect_eof() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream ls(line);
      std::string tok;
      if (ls >> tok)
        fail(Errc::parse_error,
             "trailing content at line " + std::to_string(line_no));
    }
  }

  void expect_header(const std::string& name) {
    auto tokens = next_tokens();
    if (tokens.size() != 2 || tokens[0] != name || tokens[1] != "v1")
      fail(Errc::parse_error, "expected header '" + name + " v1'");
  }

  long parse_int(const std::string& tok) {
    size_t pos = 0;
    long value = 0;
    try {
      value = std::stol(tok, &pos);
    } catch (const std::exception&) {
      fail(Errc::parse_error, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size())
      fail(Errc::parse_error, "expected an integer, got '" + tok + "'");
    return value;
  }

  int expect_count(const std::string& keyword) {
    auto tokens = next_tokens();
    if (tokens.size() != 2 || tokens[0] != keyword)
      fail(Errc::parse_error, "expected '" + keyword + " <count>'");
    long value = parse_int(tokens[1]);
    if (value < 0 || value > 1'000'000)
      fail(Errc::parse_error, keyword + " out of range");
    return static_cast<int>(value);
  }

  void expect_keyword(const std::string& keyword) {
    auto tokens = next_tokens();
    if (tokens.size() != 1 || tokens[0] != keyword)
      fail(Errc::parse_error, "expected '" + keyword + "'");
  }

  std::vector<Id> id_row(int count, int bound) {
    auto tokens = next_tokens();
    if (static_cast<int>(tokens.size()) != count)
      fail(Errc::parse_error, "expected " + std::to_string(count) +
                                  " ids at line " + std::to_string(line_no));
    std::vector<Id> out(count);
    for (int i = 0; i < count; ++i) {
      long v = parse_int(tokens[i]);
      if (v < 0 || v >= bound)
        fail(Errc::parse_error,
             "id out of range at line " + std::to_string(line_no));
      out[i] = static_cast<Id>(v);
    }
    return out;
  }
};

InverseSemigroup read_isg_block(Reader& r) {
  r.expect_header("isg");
  int n = r.expect_count("n");
  if (n < 1) fail(Errc::parse_error, "n must be positive");
  r.expect_keyword("table");
  std::vector<Id> table;
  table.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    auto row = r.id_row(n, n);
    table.insert(table.end(), row.begin(), row.end());
  }
  return validate_inverse_semigroup(n, std::move(table));
}

void write_isg_block(std::ostream& out, const InverseSemigroup& s) {
  out << "isg v1\n" << "n " << s.n << "\ntable\n";
  for (Id a = 0; a < s.n; ++a) {
    for (Id b = 0; b < s.n; ++b) {
      if (b) out << ' ';
      out << s.at(a, b);
    }
    out << '\n';
  }
}

FiniteSpace read_top_block(Reader& r) {
  r.expect_header("top");
  int m = r.expect_count("points");
  int k = r.expect_count("opens");
  std::vector<uint32_t> opens;
  for (int i = 0; i < k; ++i) {
    auto tokens = r.next_tokens();
    uint32_t mask = 0;
    if (tokens.size() == 1 && tokens[0] == "-") {
      // empty open set
    } else {
      for (const auto& tok : tokens) {
        long p = r.parse_int(tok);
        if (p < 0 || p >= m) fail(Errc::parse_error, "point out of range");
        if (mask & (1u << p)) fail(Errc::parse_error, "duplicate point");
        mask |= 1u << p;
      }
    }
    opens.push_back(mask);
  }
  if (static_cast<int>(opens.size()) != k)
    fail(Errc::parse_error, "opens count mismatch");
  return validate_space(m, std::move(opens));
}

void write_top_block(std::ostream& out, const FiniteSpace& x) {
  out << "top v1\npoints " << x.m << "\nopens " << x.opens.size() << '\n';
  for (uint32_t u : x.opens) {
    if (u == 0) {
      out << "-\n";
      continue;
    }
    bool first = true;
    for (Id p = 0; p < x.m; ++p)
      if (u & (1u << p)) {
        if (!first) out << ' ';
        out << p;
        first = false;
      }
    out << '\n';
  }
}

}  // namespace

FileKind sniff(const std::string& text) {
  std::istringstream ss(text);
  std::string first;
  ss >> first;
  if (first == "isg") return FileKind::isg;
  if (first == "psh") return FileKind::psh;
  if (first == "act") return FileKind::act;
  if (first == "top") return FileKind::top;
  if (first == "bun") return FileKind::bun;
  fail(Errc::parse_error, "unknown format header '" + first + "'");
}

InverseSemigroup read_isg(std::istream& in) {
  Reader r(in);
  auto s = read_isg_block(r);
  r.expect_eof();
  return s;
}

void write_isg(std::ostream& out, const InverseSemigroup& s) {
  write_isg_block(out, s);
}

Presheaf read_psh(std::istream& in) {
  Reader r(in);
  r.expect_header("psh");
  int k = r.expect_count("E");
  std::vector<Id> etable;
  for (int i = 0; i < k; ++i) {
    auto row = r.id_row(k, k);
    etable.insert(etable.end(), row.begin(), row.end());
  }
  Semilattice lattice = semilattice_from_table(k, std::move(etable));
  int m = r.expect_count("X");
  r.expect_keyword("p");
  std::vector<Id> support = m == 0 ? std::vector<Id>{} : r.id_row(m, k);
  r.expect_keyword("action");
  std::vector<Id> act;
  for (int i = 0; i < m; ++i) {
    auto row = r.id_row(k, m);
    act.insert(act.end(), row.begin(), row.end());
  }
  r.expect_eof();
  return validate_presheaf(m, std::move(lattice), std::move(support),
                           std::move(act));
}

void write_psh(std::ostream& out, const Presheaf& p) {
  const int k = p.lattice.size();
  out << "psh v1\nE " << k << '\n';
  for (Id i = 0; i < k; ++i) {
    for (Id j = 0; j < k; ++j) {
      if (j) out << ' ';
      out << p.lattice.alg.at(i, j);
    }
    out << '\n';
  }
  out << "X " << p.m << "\np\n";
  for (Id x = 0; x < p.m; ++x) {
    if (x) out << ' ';
    out << p.support[x];
  }
  out << "\naction\n";
  for (Id x = 0; x < p.m; ++x) {
    for (Id e = 0; e < k; ++e) {
      if (e) out << ' ';
      out << p.act_at(x, e);
    }
    out << '\n';
  }
}

SupportedAction read_act(std::istream& in) {
  Reader r(in);
  r.expect_header("act");
  InverseSemigroup s = read_isg_block(r);
  int m = r.expect_count("X");
  r.expect_keyword("p");
  std::vector<Id> support = m == 0 ? std::vector<Id>{} : r.id_row(m, s.n);
  r.expect_keyword("action");
  std::vector<Id> act;
  for (int i = 0; i < m; ++i) {
    auto row = r.id_row(s.n, m);
    act.insert(act.end(), row.begin(), row.end());
  }
  r.expect_eof();
  return validate_supported_action(m, std::move(s), std::move(support),
                                   std::move(act));
}

void write_act(std::ostream& out, const SupportedAction& a) {
  out << "act v1\n";
  write_isg_block(out, a.s);
  out << "X " << a.m << "\np\n";
  for (Id x = 0; x < a.m; ++x) {
    if (x) out << ' ';
    out << a.support[x];
  }
  out << "\naction\n";
  for (Id x = 0; x < a.m; ++x) {
    for (Id u = 0; u < a.s.n; ++u) {
      if (u) out << ' ';
      out << a.act_at(x, u);
    }
    out << '\n';
  }
}

FiniteSpace read_top(std::istream& in) {
  Reader r(in);
  auto x = read_top_block(r);
  r.expect_eof();
  return x;
}

void write_top(std::ostream& out, const FiniteSpace& x) {
  write_top_block(out, x);
}

EtaleBundle read_bun(std::istream& in) {
  Reader r(in);
  r.expect_header("bun");
  FiniteSpace total = read_top_block(r);
  FiniteSpace base = read_top_block(r);
  r.expect_keyword("pi");
  std::vector<Id> pi =
      total.m == 0 ? std::vector<Id>{} : r.id_row(total.m, base.m);
  r.expect_eof();
  return validate_bundle(std::move(total), std::move(base), std::move(pi));
}

void write_bun(std::ostream& out, const EtaleBundle& b) {
  out << "bun v1\n";
  write_top_block(out, b.total);
  write_top_block(out, b.base);
  out << "pi\n";
  for (Id p = 0; p < b.total.m; ++p) {
    if (p) out << ' ';
    out << b.pi[p];
  }
  out << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::parse_error, "cannot write file: " + path);
  out << content;
}

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace gmunn::io
