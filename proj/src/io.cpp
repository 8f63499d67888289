#include "brickwork/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iterator>
#include <sstream>

#include "brickwork/errors.hpp"

namespace brickwork {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

std::string_view strip_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void check_printable(std::string_view s, std::size_t base) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) {
      throw ParseError("byte value " + std::to_string(c) + " outside 63..126", base + i);
    }
  }
}

/// Decodes N(n); returns n and the number of bytes consumed.
std::pair<long long, std::size_t> decode_size(std::string_view s, std::size_t base) {
  if (s.empty()) throw ParseError("missing vertex count", base);
  auto val = [&](std::size_t i) { return static_cast<long long>(s[i]) - kBias; };
  if (val(0) < 63) return {val(0), 1};
  if (s.size() >= 2 && val(1) == 63) {
    if (s.size() < 8) throw ParseError("truncated 8-byte vertex count", base + s.size());
    long long n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
    return {n, 8};
  }
  if (s.size() < 4) throw ParseError("truncated 4-byte vertex count", base + s.size());
  long long n = 0;
  for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | val(i);
  return {n, 4};
}

std::string encode_size(long long n) {
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  return out;
}

std::string pack_bits(const std::vector<bool>& bits) {
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (std::size_t j = 0; j < 6; ++j) {
      value <<= 1;
      if (i + j < bits.size() && bits[i + j]) value |= 1;
    }
    out.push_back(static_cast<char>(value + kBias));
  }
  return out;
}

constexpr long long kMaxParsedVertices = 1 << 16;

}  // namespace

// ------------------------------------------------------------------ graph6

MultiGraph parse_graph6(std::string_view line) {
  line = strip_line_end(line);
  std::size_t base = 0;
  if (line.starts_with(kGraph6Header)) {
    line.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  if (line.starts_with(':') || line.starts_with(';')) {
    throw ParseError("sparse6/incremental record given to the graph6 parser", base);
  }
  if (line.starts_with('&')) throw ParseError("digraph6 is not supported", base);
  check_printable(line, base);
  auto [n, used] = decode_size(line, base);
  if (n < 1) throw ParseError("graph has no vertices", base);
  if (n > kMaxParsedVertices) throw ParseError("graph too large", base);
  const long long bit_count = n * (n - 1) / 2;
  const std::size_t expected = static_cast<std::size_t>((bit_count + 5) / 6);
  std::string_view data = line.substr(used);
  if (data.size() != expected) {
    const std::size_t at = base + used + std::min(data.size(), expected);
    throw ParseError("expected " + std::to_string(expected) + " adjacency bytes, found " +
                         std::to_string(data.size()),
                     at);
  }
  MultiGraph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = data[static_cast<std::size_t>(k / 6)] - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const int byte = data.back() - kBias;
    const int pad = 6 - static_cast<int>(bit_count % 6);
    if ((byte & ((1 << pad) - 1)) != 0) {
      throw ParseError("nonzero padding bits", base + used + data.size() - 1);
    }
  }
  return g;
}

std::string emit_graph6(const MultiGraph& g) {
  if (!g.is_simple()) {
    throw UnsupportedFormat("graph6 cannot express parallel edges; use the edge-list format");
  }
  const int n = g.vertex_count();
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
  }
  return encode_size(n) + pack_bits(bits);
}

// ----------------------------------------------------------------- sparse6

MultiGraph parse_sparse6(std::string_view line) {
  line = strip_line_end(line);
  std::size_t base = 0;
  if (line.starts_with(kSparse6Header)) {
    line.remove_prefix(kSparse6Header.size());
    base = kSparse6Header.size();
  }
  if (!line.starts_with(':')) throw ParseError("sparse6 record must start with ':'", base);
  line.remove_prefix(1);
  base += 1;
  check_printable(line, base);
  auto [n, used] = decode_size(line, base);
  if (n < 1) throw ParseError("graph has no vertices", base);
  if (n > kMaxParsedVertices) throw ParseError("graph too large", base);
  int k = 0;
  while ((1LL << k) < n) ++k;
  std::string_view data = line.substr(used);
  const std::size_t total = data.size() * 6;
  std::size_t pos = 0;
  auto bit = [&](std::size_t p) {
    return ((data[p / 6] - kBias) >> (5 - p % 6)) & 1;
  };
  MultiGraph g(static_cast<int>(n));
  long long v = 0;
  while (pos + 1 + static_cast<std::size_t>(k) <= total) {
    const std::size_t record = pos;
    const int b = bit(pos++);
    long long x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | bit(pos++);
    if (b) ++v;
    if (x >= n || v >= n) break;
    if (x > v) {
      v = x;
    } else {
      if (x == v) throw ParseError("loops are not supported", base + used + record / 6);
      g.add_edge(static_cast<int>(x), static_cast<int>(v));
    }
  }
  return g;
}

std::string emit_sparse6(const MultiGraph& g) {
  const int n = g.vertex_count();
  int k = 0;
  while ((1 << k) < n) ++k;
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(std::max(e.u, e.v), std::min(e.u, e.v));
  std::sort(edges.begin(), edges.end());
  std::vector<bool> bits;
  auto put = [&](int value) {
    for (int i = k - 1; i >= 0; --i) bits.push_back((value >> i) & 1);
  };
  int cur = 0;
  for (auto [v, u] : edges) {
    if (v == cur) {
      bits.push_back(false);
      put(u);
    } else if (v == cur + 1) {
      cur = v;
      bits.push_back(true);
      put(u);
    } else {
      cur = v;
      bits.push_back(true);
      put(v);
      bits.push_back(false);
      put(u);
    }
  }
  const std::size_t pad = (6 - bits.size() % 6) % 6;
  // Padding with ones could read as an edge to vertex n-1 when n = 2^k.
  if (k < 6 && n == (1 << k) && pad >= static_cast<std::size_t>(k) && cur < n - 1) {
    bits.push_back(false);
  }
  while (bits.size() % 6 != 0) bits.push_back(true);
  return ":" + encode_size(n) + pack_bits(bits);
}

// --------------------------------------------------------------- edge list

namespace {

struct Token {
  long long value;
  std::size_t offset;
};

class TokenCursor {
 public:
  TokenCursor(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::size_t offset() const { return base_ + pos_; }

  Token integer(const char* what) {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(std::string("missing ") + what, base_ + pos_);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
      throw ParseError(std::string("expected an integer for ") + what, base_ + start);
    }
    return Token{value, base_ + start};
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

MultiGraph read_edge_list_record(TokenCursor& cur) {
  const Token n = cur.integer("vertex count");
  if (n.value < 1 || n.value > kMaxParsedVertices) throw ParseError("vertex count out of range", n.offset);
  const Token m = cur.integer("edge count");
  if (m.value < 0) throw ParseError("negative edge count", m.offset);
  MultiGraph g(static_cast<int>(n.value));
  for (long long i = 0; i < m.value; ++i) {
    const Token u = cur.integer("edge endpoint");
    const Token v = cur.integer("edge endpoint");
    if (u.value < 0 || u.value >= n.value) throw ParseError("endpoint out of range", u.offset);
    if (v.value < 0 || v.value >= n.value) throw ParseError("endpoint out of range", v.offset);
    if (u.value == v.value) throw ParseError("loops are not supported", u.offset);
    g.add_edge(static_cast<int>(u.value), static_cast<int>(v.value));
  }
  return g;
}

}  // namespace

MultiGraph parse_edge_list(std::string_view text) {
  TokenCursor cur(text, 0);
  MultiGraph g = read_edge_list_record(cur);
  if (!cur.at_end()) throw ParseError("trailing data after edge list", cur.offset());
  return g;
}

std::string emit_edge_list(const MultiGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// --------------------------------------------------------------------- dot

std::string emit_dot(const MultiGraph& g, std::span<const DotHighlight> highlights,
                     std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    const DotHighlight* hit = nullptr;
    for (const auto& h : highlights) {
      if (std::find(h.edges.begin(), h.edges.end(), e.id) != h.edges.end()) {
        hit = &h;
        break;
      }
    }
    if (hit != nullptr) {
      out << " [color=\"" << hit->color << "\", penwidth=3";
      if (!hit->label.empty()) out << ", label=\"" << hit->label << "\"";
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------- dispatch

Format parse_format(std::string_view name) {
  if (name == "g6" || name == "graph6") return Format::graph6;
  if (name == "s6" || name == "sparse6") return Format::sparse6;
  if (name == "edgelist" || name == "el" || name == "edges") return Format::edgelist;
  if (name == "dot") return Format::dot;
  throw PreconditionError("unknown graph format '" + std::string(name) + "'");
}

std::string emit(const MultiGraph& g, Format format) {
  switch (format) {
    case Format::graph6:
      return emit_graph6(g) + "\n";
    case Format::sparse6:
      return emit_sparse6(g) + "\n";
    case Format::edgelist:
      return emit_edge_list(g);
    case Format::dot:
      return emit_dot(g);
  }
  return {};
}

GraphReader::GraphReader(std::istream& in, Format format) : in_(in), format_(format) {
  if (format == Format::dot) throw PreconditionError("DOT input is not supported");
}

std::optional<std::string> GraphReader::next_token() {
  std::string line;
  while (std::getline(in_, line)) {
    const std::size_t start = offset_;
    offset_ += line.size() + 1;
    std::string_view trimmed = strip_line_end(line);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
      trimmed.remove_suffix(1);
    }
    if (trimmed.empty()) continue;
    pending_.assign(1, std::to_string(start));
    return std::string(trimmed);
  }
  return std::nullopt;
}

std::optional<MultiGraph> GraphReader::next() {
  if (format_ == Format::edgelist) {
    // Edge-list records may span lines: consume the rest of the stream once.
    if (pending_.empty() || pending_[0] != "edgelist") {
      std::string all((std::istreambuf_iterator<char>(in_)), std::istreambuf_iterator<char>());
      pending_ = {"edgelist", std::move(all), "0"};
    }
    std::string_view rest(pending_[1]);
    std::size_t pos = std::stoull(pending_[2]);
    TokenCursor cur(rest.substr(pos), pos);
    if (cur.at_end()) return std::nullopt;
    MultiGraph g = read_edge_list_record(cur);
    pending_[2] = std::to_string(cur.offset());
    return g;
  }
  auto line = next_token();
  if (!line) return std::nullopt;
  const std::size_t start = std::stoull(pending_[0]);
  try {
    if (line->starts_with(':') || line->starts_with(kSparse6Header)) return parse_sparse6(*line);
    if (format_ == Format::sparse6) throw ParseError("sparse6 record must start with ':'", 0);
    return parse_graph6(*line);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), start + e.offset());
  }
}

std::vector<MultiGraph> read_all(std::istream& in, Format format) {
  GraphReader reader(in, format);
  std::vector<MultiGraph> out;
  while (auto g = reader.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace brickwork
