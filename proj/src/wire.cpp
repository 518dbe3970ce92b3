#include "mbe/mr/wire.hpp"

#include <charconv>
#include <stdexcept>

namespace mbe::wire {

namespace {

void append_number(std::string& out, std::uint64_t x) {
  char buf[24];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  out.append(buf, end);
}

class Tokens {
 public:
  explicit Tokens(std::string_view s) : s_(s) {}

  std::string_view next() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    if (pos_ >= s_.size()) throw std::runtime_error("truncated payload");
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ' ') ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::uint64_t next_number() {
    auto tok = next();
    std::uint64_t x = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
      throw std::runtime_error("bad number in payload: '" + std::string(tok) + "'");
    }
    return x;
  }

  bool done() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    return pos_ >= s_.size();
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

void expect_tag(Tokens& t, std::string_view tag) {
  if (t.next() != tag) throw std::runtime_error("unexpected payload tag");
}

}  // namespace

std::string encode_edge(VertexId u, VertexId v) {
  std::string out;
  append_number(out, u);
  out.push_back(' ');
  append_number(out, v);
  return out;
}

std::pair<VertexId, VertexId> decode_edge(std::string_view payload) {
  Tokens t(payload);
  const VertexId u = t.next_number();
  const VertexId v = t.next_number();
  return {u, v};
}

std::string encode_adjacency(VertexId v, std::span<const VertexId> neighbors) {
  std::string out = "A ";
  append_number(out, v);
  for (VertexId n : neighbors) {
    out.push_back(' ');
    append_number(out, n);
  }
  return out;
}

Adjacency decode_adjacency(std::string_view payload) {
  Tokens t(payload);
  expect_tag(t, "A");
  Adjacency a;
  a.v = t.next_number();
  while (!t.done()) a.neighbors.push_back(t.next_number());
  return a;
}

std::string encode_triple(const PropertyTriple& tr) {
  std::string out = "T ";
  append_number(out, tr.destination);
  out.push_back(' ');
  append_number(out, tr.source);
  out.push_back(' ');
  append_number(out, tr.property);
  return out;
}

PropertyTriple decode_triple(std::string_view payload) {
  Tokens t(payload);
  expect_tag(t, "T");
  PropertyTriple tr;
  tr.destination = t.next_number();
  tr.source = t.next_number();
  tr.property = t.next_number();
  return tr;
}

std::string encode_property(const PropertyValue& p) {
  std::string out = "P ";
  append_number(out, p.source);
  out.push_back(' ');
  append_number(out, p.property);
  return out;
}

PropertyValue decode_property(std::string_view payload) {
  Tokens t(payload);
  expect_tag(t, "P");
  PropertyValue p;
  p.source = t.next_number();
  p.property = t.next_number();
  return p;
}

std::string encode_biclique(const Biclique& b) {
  std::string out = "B";
  for (VertexId v : b.left()) {
    out.push_back(' ');
    append_number(out, v);
  }
  out += " |";
  for (VertexId v : b.right()) {
    out.push_back(' ');
    append_number(out, v);
  }
  return out;
}

Biclique decode_biclique(std::string_view payload) {
  Tokens t(payload);
  expect_tag(t, "B");
  VertexSet left, right;
  bool in_right = false;
  while (!t.done()) {
    auto tok = t.next();
    if (tok == "|") {
      in_right = true;
      continue;
    }
    std::uint64_t x = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
      throw std::runtime_error("bad vertex in biclique payload");
    }
    (in_right ? right : left).push_back(x);
  }
  return Biclique(std::move(left), std::move(right));
}

char payload_tag(std::string_view payload) {
  return payload.empty() ? '\0' : payload.front();
}

std::string vertex_key(VertexId v) {
  std::string out;
  append_number(out, v);
  return out;
}

VertexId decode_vertex(std::string_view token) {
  Tokens t(token);
  const VertexId v = t.next_number();
  if (!t.done()) throw std::runtime_error("trailing bytes after vertex id");
  return v;
}

}  // namespace mbe::wire
