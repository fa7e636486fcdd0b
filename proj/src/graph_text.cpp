#include "frcheck/graph_text.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include <fmt/core.h>

#include "frcheck/error.hpp"

namespace frcheck {
namespace {

constexpr int kBias = 63;

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::MalformedRecord, why);
}

class BitWriter {
 public:
  void put(std::uint64_t value, int width) {
    for (int b = width - 1; b >= 0; --b) put_bit((value >> b) & 1u);
  }
  void put_bit(unsigned bit) {
    acc_ = (acc_ << 1) | bit;
    if (++used_ == 6) flush();
  }
  int pending() const { return used_; }
  std::string finish() {
    if (used_ > 0) {
      acc_ <<= (6 - used_);
      flush();
    }
    return std::move(out_);
  }
  std::string& out() { return out_; }

 private:
  void flush() {
    out_.push_back(static_cast<char>(kBias + acc_));
    acc_ = 0;
    used_ = 0;
  }
  std::string out_;
  unsigned acc_ = 0;
  int used_ = 0;
};

class BitReader {
 public:
  explicit BitReader(std::string_view bytes) : bytes_(bytes) {}
  std::size_t remaining() const { return bytes_.size() * 6 - pos_; }
  unsigned bit() {
    unsigned byte = static_cast<unsigned char>(bytes_[pos_ / 6]) - kBias;
    unsigned b = (byte >> (5 - pos_ % 6)) & 1u;
    ++pos_;
    return b;
  }
  std::uint64_t bits(int width) {
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | bit();
    return v;
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

void check_printable(std::string_view s) {
  for (char c : s) {
    auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) malformed(fmt::format("byte {} outside 63..126", static_cast<int>(b)));
  }
}

// Reads the size field N(n) and advances `s` past it.
std::int64_t read_size(std::string_view& s) {
  if (s.empty()) malformed("missing size field");
  auto byte = [&](std::size_t i) { return static_cast<unsigned char>(s[i]) - kBias; };
  if (static_cast<unsigned char>(s[0]) != 126) {
    std::int64_t n = byte(0);
    s.remove_prefix(1);
    return n;
  }
  std::size_t width = (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126) ? 6 : 3;
  std::size_t skip = width == 6 ? 2 : 1;
  if (s.size() < skip + width) malformed("truncated size field");
  std::int64_t n = 0;
  for (std::size_t i = 0; i < width; ++i) n = (n << 6) | byte(skip + i);
  s.remove_prefix(skip + width);
  return n;
}

void write_size(std::string& out, std::int64_t n) {
  auto push = [&](std::int64_t six) { out.push_back(static_cast<char>(kBias + six)); };
  if (n <= 62) {
    push(n);
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) push((n >> shift) & 63);
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) push((n >> shift) & 63);
  }
}

int vertex_bits(std::int64_t n) {
  int k = 0;
  while ((std::int64_t{1} << k) < n) ++k;
  return k;
}

CubicGraph parse_graph6(std::string_view s) {
  check_printable(s);
  std::int64_t n = read_size(s);
  std::int64_t bits = n * (n - 1) / 2;
  std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() != expected)
    malformed(fmt::format("graph6 body has {} bytes, expected {} for n={}", s.size(), expected, n));
  BitReader in(s);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (in.bit()) edges.emplace_back(i, j);
  return build_graph(static_cast<int>(n), edges);
}

CubicGraph parse_sparse6(std::string_view s) {
  s.remove_prefix(1);  // ':'
  check_printable(s);
  std::int64_t n = read_size(s);
  const int k = vertex_bits(n);
  BitReader in(s);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::int64_t v = 0;
  while (in.remaining() >= static_cast<std::size_t>(k) + 1) {
    if (in.bit()) ++v;
    auto x = static_cast<std::int64_t>(in.bits(k));
    if (x > v)
      v = x;
    else if (v < n)
      edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(v));
  }
  return build_graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const CubicGraph& g) {
  if (!g.is_simple())
    throw Error(ErrorCode::SimpleFormatOnMultigraph, "graph6 cannot encode parallel edges");
  const int n = g.vertex_count();
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (const auto& e : g.edges()) adj[e.u * n + e.v] = adj[e.v * n + e.u] = 1;
  std::string out;
  write_size(out, n);
  BitWriter w;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) w.put_bit(adj[i * n + j]);
  return out + w.finish();
}

std::string encode_sparse6(const CubicGraph& g) {
  const int n = g.vertex_count();
  const int k = vertex_bits(n);
  std::vector<std::pair<Vertex, Vertex>> by_larger;
  for (auto [u, v] : g.labeled_edges()) by_larger.emplace_back(v, u);
  std::sort(by_larger.begin(), by_larger.end());

  std::string out = ":";
  write_size(out, n);
  BitWriter w;
  Vertex last = 0;
  for (auto [v, u] : by_larger) {
    if (v == last) {
      w.put_bit(0);
      w.put(u, k);
    } else {
      w.put_bit(1);
      if (v > last + 1) {
        w.put(v, k);
        w.put_bit(0);
      }
      w.put(u, k);
      last = v;
    }
  }
  if (w.pending() > 0) {
    int room = 6 - w.pending();
    // A run of 1s long enough to hold b + x would decode as a loop at n-1.
    if (k < 6 && room >= k + 1 && last == n - 2 && n == (1 << k)) {
      w.put_bit(0);
      --room;
    }
    while (room-- > 0) w.put_bit(1);
  }
  return out + w.finish();
}

}  // namespace

std::optional<std::string_view> strip_record(std::string_view line) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
  while (!line.empty() && is_space(line.front())) line.remove_prefix(1);
  for (std::string_view header : {">>graph6<<", ">>sparse6<<"})
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
  if (line.empty()) return std::nullopt;
  return line;
}

CubicGraph parse_graph_text(std::string_view line) {
  auto record = strip_record(line);
  if (!record) malformed("empty record");
  if (record->front() == '>') malformed("unrecognised header");
  if (record->front() == '&') malformed("digraph6 is not supported");
  if (record->front() == ';') malformed("incremental sparse6 is not supported");
  if (record->front() == ':') return parse_sparse6(*record);
  return parse_graph6(*record);
}

std::string encode_graph_text(const CubicGraph& g, TextFormat format) {
  return format == TextFormat::Graph6 ? encode_graph6(g) : encode_sparse6(g);
}

std::string canonical_text(const CubicGraph& g) {
  return encode_graph_text(g, g.is_simple() ? TextFormat::Graph6 : TextFormat::Sparse6);
}

}  // namespace frcheck
