#include "gallai/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "gallai/search.hpp"

namespace gallai {

namespace {

const char* provenance_name(Provenance p) {
  return p == Provenance::Proven ? "proven" : "conjectural";
}

Provenance parse_provenance(const std::string& word) {
  if (word == "proven") return Provenance::Proven;
  if (word == "conjectural") return Provenance::Conjectural;
  throw Error(ErrorCode::SyntaxError, "bad provenance '" + word + "'");
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) {
        if (pos < text.size()) lines_.emplace_back(text.substr(pos));
        break;
      }
      lines_.emplace_back(text.substr(pos, nl - pos));
      pos = nl + 1;
    }
  }

  bool done() const { return idx_ >= lines_.size(); }

  const std::string& peek() const {
    if (done()) throw Error(ErrorCode::SyntaxError, "unexpected end of certificate");
    return lines_[idx_];
  }

  std::string next() {
    std::string line = peek();
    ++idx_;
    return line;
  }

  std::size_t line_number() const { return idx_ + 1; }

 private:
  std::vector<std::string> lines_;
  std::size_t idx_ = 0;
};

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

long long parse_int(const std::string& word, const char* what) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(word, &used);
    if (used != word.size()) throw std::invalid_argument(word);
    return value;
  } catch (const std::exception&) {
    throw Error(ErrorCode::SyntaxError, std::string("bad ") + what + " '" + word + "'");
  }
}

}  // namespace

std::vector<std::string> default_color_names(int k) {
  static const char* base[] = {"red", "blue", "green", "yellow", "orange", "purple", "teal",
                               "pink"};
  std::vector<std::string> names;
  names.reserve(k);
  for (int j = 1; j <= k; ++j) {
    if (j <= 8) {
      names.emplace_back(base[j - 1]);
    } else {
      names.emplace_back("c" + std::to_string(j));
    }
  }
  return names;
}

ColoredComplete Certificate::coloring() const {
  if (static_cast<int>(edges.size()) != n * (n - 1) / 2)
    throw Error(ErrorCode::SemanticError, "edge list size does not match n");
  ColoredComplete c(n, k);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const auto [u, v] = ColoredComplete::edge_from_index(e);
    c.set_color(u, v, edges[e]);
  }
  return c;
}

std::string serialize(const Certificate& cert) {
  if (cert.n < 1 || cert.k < 1 ||
      static_cast<int>(cert.edges.size()) != cert.n * (cert.n - 1) / 2)
    throw Error(ErrorCode::SemanticError, "certificate edge list does not match n");
  if (!cert.color_names.empty() && static_cast<int>(cert.color_names.size()) != cert.k)
    throw Error(ErrorCode::SemanticError, "color map must name every color");
  if (!cert.targets.empty() && static_cast<int>(cert.targets.size()) != cert.k)
    throw Error(ErrorCode::SemanticError, "need a target for every color");
  if (cert.claims.has_value() != cert.verification.has_value())
    throw Error(ErrorCode::SemanticError, "claims and verification must appear together");
  std::ostringstream out;
  out << "gallai-certificate " << cert.version << "\n";
  out << "n " << cert.n << "\n";
  out << "k " << cert.k << "\n";
  out << "provenance " << provenance_name(cert.provenance) << "\n";
  if (!cert.color_names.empty()) {
    out << "colors";
    for (std::size_t j = 0; j < cert.color_names.size(); ++j) {
      out << " " << (j + 1) << "=" << cert.color_names[j];
    }
    out << "\n";
  }
  for (std::size_t j = 0; j < cert.targets.size(); ++j) {
    out << "target " << (j + 1) << " " << cert.targets[j].to_string() << "\n";
  }
  out << "edges " << cert.n * (cert.n - 1) / 2 << "\n";
  for (int u = 0; u < cert.n; ++u) {
    for (int v = u + 1; v < cert.n; ++v) {
      out << "edge " << u << " " << v << " "
          << static_cast<int>(cert.edges[ColoredComplete::edge_index(u, v)]) << "\n";
    }
  }
  if (cert.claims) {
    out << "claim gallai " << (cert.claims->gallai ? "true" : "false") << "\n";
    for (int j : cert.claims->absent) out << "claim absent " << j << "\n";
  }
  if (cert.verification) {
    out << "verification verdict " << cert.verification->verdict << "\n";
    out << "verification tool " << cert.verification->tool << "\n";
    out << "verification nodes " << cert.verification->nodes << "\n";
  }
  out << "end\n";
  return out.str();
}

Certificate parse_certificate(std::string_view text) {
  LineReader reader(text);
  Certificate cert;

  {
    const auto words = split_words(reader.next());
    if (words.size() != 2 || words[0] != "gallai-certificate")
      throw Error(ErrorCode::SyntaxError, "missing certificate header");
    cert.version = static_cast<int>(parse_int(words[1], "version"));
    if (cert.version != kCertificateVersion)
      throw Error(ErrorCode::SemanticError,
                  "unsupported format version " + std::to_string(cert.version));
  }
  {
    const auto words = split_words(reader.next());
    if (words.size() != 2 || words[0] != "n")
      throw Error(ErrorCode::SyntaxError, "expected 'n <count>'");
    const long long n = parse_int(words[1], "n");
    if (n < 1 || n > ColoredComplete::kMaxVertices)
      throw Error(ErrorCode::SemanticError, "n out of range");
    cert.n = static_cast<int>(n);
  }
  {
    const auto words = split_words(reader.next());
    if (words.size() != 2 || words[0] != "k")
      throw Error(ErrorCode::SyntaxError, "expected 'k <count>'");
    const long long k = parse_int(words[1], "k");
    if (k < 1 || k > ColoredComplete::kMaxColors)
      throw Error(ErrorCode::SemanticError, "k out of range");
    cert.k = static_cast<int>(k);
  }
  {
    const auto words = split_words(reader.next());
    if (words.size() != 2 || words[0] != "provenance")
      throw Error(ErrorCode::SyntaxError, "expected 'provenance <flag>'");
    cert.provenance = parse_provenance(words[1]);
  }

  if (!reader.done() && reader.peek().rfind("colors", 0) == 0) {
    const auto words = split_words(reader.next());
    if (static_cast<int>(words.size()) != cert.k + 1)
      throw Error(ErrorCode::SemanticError, "color map must name every color");
    for (int j = 1; j <= cert.k; ++j) {
      const std::string& entry = words[j];
      const std::size_t eq = entry.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorCode::SyntaxError, "bad color map entry '" + entry + "'");
      if (parse_int(entry.substr(0, eq), "color index") != j)
        throw Error(ErrorCode::SemanticError, "color map out of order");
      cert.color_names.push_back(entry.substr(eq + 1));
    }
  }

  while (!reader.done() && reader.peek().rfind("target ", 0) == 0) {
    const auto words = split_words(reader.next());
    if (words.size() != 3) throw Error(ErrorCode::SyntaxError, "expected 'target <color> <spec>'");
    const long long j = parse_int(words[1], "target color");
    if (j != static_cast<long long>(cert.targets.size()) + 1)
      throw Error(ErrorCode::SemanticError, "target colors must run 1..k in order");
    cert.targets.push_back(TargetSpec::parse(words[2]));
  }
  if (!cert.targets.empty() && static_cast<int>(cert.targets.size()) != cert.k)
    throw Error(ErrorCode::SemanticError, "need a target for every color");

  {
    const auto words = split_words(reader.next());
    if (words.size() != 2 || words[0] != "edges")
      throw Error(ErrorCode::SyntaxError, "expected 'edges <count>'");
    const long long count = parse_int(words[1], "edge count");
    if (count != static_cast<long long>(cert.n) * (cert.n - 1) / 2)
      throw Error(ErrorCode::SemanticError, "edge count does not match n");
  }
  const int edge_total = cert.n * (cert.n - 1) / 2;
  cert.edges.assign(edge_total, 0);
  std::vector<bool> seen(edge_total, false);
  for (int i = 0; i < edge_total; ++i) {
    const auto words = split_words(reader.next());
    if (words.size() != 4 || words[0] != "edge")
      throw Error(ErrorCode::SyntaxError, "expected 'edge <u> <v> <color>'");
    const long long u = parse_int(words[1], "vertex");
    const long long v = parse_int(words[2], "vertex");
    const long long c = parse_int(words[3], "color");
    if (u < 0 || v < 0 || u >= cert.n || v >= cert.n || u == v)
      throw Error(ErrorCode::SemanticError, "edge endpoints out of range");
    if (c < 1 || c > cert.k) throw Error(ErrorCode::SemanticError, "edge color out of range");
    const int idx = ColoredComplete::edge_index(static_cast<int>(u), static_cast<int>(v));
    if (seen[idx]) throw Error(ErrorCode::SemanticError, "duplicate edge in certificate");
    seen[idx] = true;
    cert.edges[idx] = static_cast<Color>(c);
  }

  if (!reader.done() && reader.peek().rfind("claim ", 0) == 0) {
    Certificate::Claims claims;
    {
      const auto words = split_words(reader.next());
      if (words.size() != 3 || words[1] != "gallai" || (words[2] != "true" && words[2] != "false"))
        throw Error(ErrorCode::SyntaxError, "expected 'claim gallai true|false'");
      claims.gallai = words[2] == "true";
    }
    while (!reader.done() && reader.peek().rfind("claim absent", 0) == 0) {
      const auto words = split_words(reader.next());
      if (words.size() != 3) throw Error(ErrorCode::SyntaxError, "expected 'claim absent <color>'");
      const long long j = parse_int(words[2], "claim color");
      if (j < 1 || j > cert.k) throw Error(ErrorCode::SemanticError, "claim color out of range");
      if (!claims.absent.empty() && j <= claims.absent.back())
        throw Error(ErrorCode::SemanticError, "absence claims must ascend");
      claims.absent.push_back(static_cast<int>(j));
    }
    cert.claims = std::move(claims);
  }

  if (!reader.done() && reader.peek().rfind("verification ", 0) == 0) {
    Certificate::Verification ver;
    const auto expect = [&reader](const char* field) {
      auto words = split_words(reader.next());
      if (words.size() != 3 || words[0] != "verification" || words[1] != field)
        throw Error(ErrorCode::SyntaxError, std::string("expected 'verification ") + field + "'");
      return words[2];
    };
    ver.verdict = expect("verdict");
    ver.tool = expect("tool");
    ver.nodes = static_cast<std::uint64_t>(parse_int(expect("nodes"), "node count"));
    cert.verification = std::move(ver);
  }

  if (cert.claims.has_value() != cert.verification.has_value())
    throw Error(ErrorCode::SemanticError, "claims and verification must appear together");
  if (cert.claims && cert.targets.empty() && !cert.claims->absent.empty())
    throw Error(ErrorCode::SemanticError, "absence claims need declared targets");

  if (reader.done() || reader.next() != "end")
    throw Error(ErrorCode::SyntaxError, "missing 'end' line");
  while (!reader.done()) {
    if (!reader.next().empty())
      throw Error(ErrorCode::SyntaxError, "trailing content after 'end'");
  }
  return cert;
}

Certificate witness_certificate(const GRInstance& inst, const ColoredComplete& coloring,
                                const VerdictReport& report) {
  Certificate cert;
  cert.n = coloring.order();
  cert.k = coloring.colors();
  cert.provenance = gr_provenance(inst);
  cert.color_names = default_color_names(cert.k);
  cert.targets = targets_of(inst);
  cert.edges.assign(coloring.triangle().begin(), coloring.triangle().end());
  Certificate::Claims claims;
  claims.gallai = true;
  for (int j = 1; j <= cert.k; ++j) claims.absent.push_back(j);
  cert.claims = std::move(claims);
  cert.verification =
      Certificate::Verification{verdict_name(report.verdict), kToolVersion, report.stats.nodes};
  return cert;
}

Certificate coloring_certificate(const ColoredComplete& coloring) {
  Certificate cert;
  cert.n = coloring.order();
  cert.k = coloring.colors();
  cert.provenance = Provenance::Proven;
  cert.color_names = default_color_names(cert.k);
  cert.edges.assign(coloring.triangle().begin(), coloring.triangle().end());
  return cert;
}

VerdictReport check_certificate(const Certificate& cert) {
  const ColoredComplete c = cert.coloring();
  VerdictReport report;
  report.claim = "certificate claims hold for the stored coloring";
  if (!cert.claims) {
    report.claim = "certificate is structurally well-formed (no claims)";
    report.verdict = Verdict::Verified;
    return report;
  }

  const auto rainbow = find_rainbow_triangle(c);
  if (cert.claims->gallai != !rainbow.has_value()) {
    report.verdict = Verdict::Refuted;
    report.rainbow = rainbow;
    return report;
  }
  for (int j : cert.claims->absent) {
    if (auto emb = has_target(c, j, cert.targets[j - 1])) {
      report.verdict = Verdict::Refuted;
      report.embedding = std::move(emb);
      return report;
    }
  }
  report.verdict = Verdict::Verified;
  return report;
}

}  // namespace gallai
