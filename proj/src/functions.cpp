// Copyright 2026 The exq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exq/functions.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "exq/error.hpp"

namespace exq {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

long parse_long(std::string_view s, const char* what) {
  s = trim(s);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorKind::Parse,
                std::string("function spec: bad integer for ") + what + ": '" +
                    std::string(s) + "'");
  return v;
}

void bad_param(const std::string& msg) {
  throw Error(ErrorKind::InvalidParameter, msg);
}

}  // namespace

SymmetricFunction::SymmetricFunction(std::size_t n_, std::vector<Label> labels_)
    : n(n_), labels(std::move(labels_)) {
  if (labels.size() != n + 1)
    throw Error(ErrorKind::InvalidParameter,
                "symmetric function on n=" + std::to_string(n) + " needs " +
                    std::to_string(n + 1) + " labels, got " +
                    std::to_string(labels.size()));
  for (Label l : labels)
    if (l < 0) throw Error(ErrorKind::InvalidParameter, "labels must be >= 0");
}

std::size_t hamming_weight(const BitString& x) { return x.weight(); }

Label eval_symmetric(const SymmetricFunction& f, const BitString& x) {
  if (x.size() != f.n)
    throw Error(ErrorKind::DimensionMismatch,
                "input length " + std::to_string(x.size()) +
                    " differs from function arity " + std::to_string(f.n));
  return f.labels[hamming_weight(x)];
}

bool validate_nonevasive_promise(const SymmetricFunction& f, std::size_t k) {
  if (k < 1 || k > f.n)
    throw Error(ErrorKind::OutOfRange, "promise parameter k=" + std::to_string(k) +
                                           " must lie in [1, " +
                                           std::to_string(f.n) + "]");
  return f.labels[0] == f.labels[k] && f.labels[f.n - k] == f.labels[f.n];
}

SymmetricFunction builtin_table(const FunctionFamily& family, std::size_t n) {
  const long nn = static_cast<long>(n);
  std::vector<Label> t(n + 1);
  switch (family.kind) {
    case FunctionFamily::Kind::Mod:
      if (family.p1 < 1) bad_param("MOD(m) needs m >= 1");
      for (long w = 0; w <= nn; ++w) t[w] = w % family.p1;
      break;
    case FunctionFamily::Kind::Exact:
      if (family.p1 < 0 || family.p1 > nn) bad_param("EXACT(k) needs 0 <= k <= n");
      for (long w = 0; w <= nn; ++w) t[w] = w == family.p1 ? 1 : 0;
      break;
    case FunctionFamily::Kind::ExactPair:
      if (family.p1 < 0 || family.p1 >= family.p2 || family.p2 > nn)
        bad_param("EXACT(k,l) needs 0 <= k < l <= n");
      for (long w = 0; w <= nn; ++w)
        t[w] = (w == family.p1 || w == family.p2) ? 1 : 0;
      break;
    case FunctionFamily::Kind::Threshold:
      if (family.p1 < 0 || family.p1 > nn) bad_param("TH(k) needs 0 <= k <= n");
      for (long w = 0; w <= nn; ++w) t[w] = w >= family.p1 ? 1 : 0;
      break;
    case FunctionFamily::Kind::Parity:
      for (long w = 0; w <= nn; ++w) t[w] = w % 2;
      break;
  }
  return SymmetricFunction(n, std::move(t));
}

SymmetricFunction random_promise_table(std::size_t n, std::size_t k,
                                       std::uint64_t seed, Label alphabet) {
  if (k < 1 || k > n)
    throw Error(ErrorKind::OutOfRange, "random_promise_table needs 1 <= k <= n");
  if (alphabet < 1)
    throw Error(ErrorKind::InvalidParameter, "alphabet must be >= 1");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<Label> pick(0, alphabet - 1);
  std::vector<Label> t(n + 1);
  for (auto& v : t) v = pick(gen);
  t[k] = t[0];
  t[n] = t[n - k];
  return SymmetricFunction(n, std::move(t));
}

SymmetricFunction parse_function_spec(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = trim(text.substr(pos, nl == std::string_view::npos
                                                ? std::string_view::npos
                                                : nl - pos));
    if (!line.empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (lines.size() != 2 || !lines[0].starts_with("n=") || !lines[1].starts_with("F="))
    throw Error(ErrorKind::Parse,
                "function spec must be two lines: 'n=<int>' then 'F=<labels>'");
  const long n = parse_long(lines[0].substr(2), "n");
  if (n < 1) throw Error(ErrorKind::Parse, "function spec: n must be >= 1");
  std::vector<Label> labels;
  std::string_view rest = lines[1].substr(2);
  while (true) {
    const auto comma = rest.find(',');
    labels.push_back(parse_long(rest.substr(0, comma), "F"));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (labels.size() != static_cast<std::size_t>(n) + 1)
    throw Error(ErrorKind::Parse, "function spec: F must list n+1 labels");
  return SymmetricFunction(static_cast<std::size_t>(n), std::move(labels));
}

std::string format_function_spec(const SymmetricFunction& f) {
  std::ostringstream os;
  os << "n=" << f.n << "\nF=";
  for (std::size_t i = 0; i < f.labels.size(); ++i) {
    if (i) os << ',';
    os << f.labels[i];
  }
  os << '\n';
  return os.str();
}

SymmetricFunction load_function_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::Io, "cannot read function spec: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_function_spec(ss.str());
}

}  // namespace exq
