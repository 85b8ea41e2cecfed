#include "robspan/certificate.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "robspan/error.hpp"
#include "robspan/graph_io.hpp"

namespace robspan {

SpannerCheck verify_certificate(const GeomGraph& g, const RobustnessCertificate& cert,
                                const SpannerCheckOptions& options) {
  cert.failed.check_range(g.index_count());
  cert.casualties.check_range(g.index_count());
  if (!cert.casualties.includes(cert.failed)) throw InputError("certificate: S+ does not contain S");
  const VertexSet survivors = g.vertices().minus(cert.casualties);
  const GeomGraph damaged = remove_vertices(g, cert.failed);
  return check_spanner(damaged, survivors, cert.t, cert.mode, options);
}

namespace {

void append_list(std::string& out, const char* label, const VertexSet& s) {
  out += label;
  out += ':';
  for (Index v : s) {
    out += ' ';
    out += std::to_string(v);
  }
  out += '\n';
}

const char* flag(bool b) { return b ? "true" : "false"; }

bool parse_flag(const std::string& value, std::size_t line) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw ParseError(line, "expected true|false, got '" + value + "'");
}

VertexSet parse_list(const std::string& line, const std::string& label, std::size_t line_no) {
  if (line.rfind(label + ":", 0) != 0) throw ParseError(line_no, "expected '" + label + ":' list");
  std::istringstream in(line.substr(label.size() + 1));
  std::vector<Index> items;
  std::string token;
  while (in >> token) {
    Index v{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) throw ParseError(line_no, "bad index '" + token + "'");
    items.push_back(v);
  }
  return VertexSet(std::move(items));
}

}  // namespace

std::string to_text(const RobustnessCertificate& cert) {
  std::string out = "t=" + format_real(cert.t) + " mode=" + std::string(to_string(cert.mode)) +
                    " |S|=" + std::to_string(cert.failed.size()) + " |S+|=" + std::to_string(cert.casualties.size()) +
                    " verified=" + flag(cert.verified) + " minimal=" + flag(cert.minimal) +
                    " sampled=" + flag(cert.sampled) + "\n";
  append_list(out, "S", cert.failed);
  append_list(out, "S+", cert.casualties);
  return out;
}

RobustnessCertificate parse_certificate(std::istream& in) {
  std::string header, s_line, splus_line;
  if (!std::getline(in, header)) throw ParseError(1, "missing certificate header");
  if (!std::getline(in, s_line)) throw ParseError(2, "missing S list");
  if (!std::getline(in, splus_line)) throw ParseError(3, "missing S+ list");

  RobustnessCertificate cert;
  std::size_t k = 0, m = 0;
  std::istringstream fields(header);
  std::string field;
  int seen = 0;
  while (fields >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError(1, "malformed field '" + field + "'");
    const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
    try {
      if (key == "t") cert.t = std::stod(value);
      else if (key == "mode") cert.mode = parse_mode(value);
      else if (key == "|S|") k = std::stoul(value);
      else if (key == "|S+|") m = std::stoul(value);
      else if (key == "verified") cert.verified = parse_flag(value, 1);
      else if (key == "minimal") cert.minimal = parse_flag(value, 1);
      else if (key == "sampled") cert.sampled = parse_flag(value, 1);
      else throw ParseError(1, "unknown field '" + key + "'");
    } catch (const std::logic_error&) {
      throw ParseError(1, "bad value in field '" + field + "'");
    }
    ++seen;
  }
  if (seen < 6) throw ParseError(1, "incomplete certificate header");
  cert.failed = parse_list(s_line, "S", 2);
  cert.casualties = parse_list(splus_line, "S+", 3);
  if (cert.failed.size() != k) throw ParseError(2, "|S| does not match list length");
  if (cert.casualties.size() != m) throw ParseError(3, "|S+| does not match list length");
  return cert;
}

void write_certificate(const std::filesystem::path& path, const RobustnessCertificate& cert) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
  out << to_text(cert);
}

RobustnessCertificate read_certificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "' for reading");
  return parse_certificate(in);
}

}  // namespace robspan
