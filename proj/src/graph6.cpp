#include "holecert/graph6.hpp"

namespace holecert {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int edge_bit_count(int n) { return n * (n - 1) / 2; }

int checked_char(char ch, std::size_t pos) {
  const int v = static_cast<unsigned char>(ch);
  if (v < kBias || v > 126) {
    throw Graph6Error("graph6: character code " + std::to_string(v) + " at offset " +
                      std::to_string(pos) + " outside [63, 126]");
  }
  return v - kBias;
}

}  // namespace

Graph decode_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("graph6: empty input");

  int n = 0;
  std::size_t pos = 0;
  if (line[0] == '~') {
    // 63 <= n <= 258047: '~' then three 6-bit groups. '~~' (n > 258047) is out of range here.
    if (line.size() < 4 || line[1] == '~') throw Graph6Error("graph6: malformed length prefix");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | checked_char(line[i], i);
    if (n < 63) throw Graph6Error("graph6: non-canonical extended length " + std::to_string(n));
    pos = 4;
  } else {
    n = checked_char(line[0], 0);
    pos = 1;
  }
  if (n > kMaxOrder) {
    throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds supported maximum " +
                      std::to_string(kMaxOrder));
  }

  const int bits = edge_bit_count(n);
  const std::size_t groups = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos < groups) throw Graph6Error("graph6: truncated edge data");
  if (line.size() - pos > groups) throw Graph6Error("graph6: trailing characters after edge data");

  GraphBuilder b(n);
  int k = 0;
  for (std::size_t gi = 0; gi < groups; ++gi) {
    const int group = checked_char(line[pos + gi], pos + gi);
    for (int shift = 5; shift >= 0; --shift, ++k) {
      const bool set = (group >> shift) & 1;
      if (k >= bits) {
        if (set) throw Graph6Error("graph6: nonzero padding bits");
        continue;
      }
      if (!set) continue;
      // Column-major upper triangle: k enumerates (0,1), (0,2), (1,2), (0,3), ...
      int j = 1;
      while (j * (j + 1) / 2 <= k) ++j;
      const int i = k - j * (j - 1) / 2;
      b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder) throw Graph6Error("graph6: order exceeds supported maximum");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  }
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

}  // namespace holecert
