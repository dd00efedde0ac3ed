// Copyright 2026 The semdd Authors.
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

#include "semdd/bench/synth.hpp"

#include <charconv>
#include <random>
#include <stdexcept>

#include "semdd/prov/builtin_schemas.hpp"
#include "semdd/prov/transform.hpp"

namespace semdd::bench {

namespace {

std::string fixed(double v, int precision) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
  return std::string(buf, ptr);
}

std::string padded(char prefix, std::size_t i, int width) {
  std::string digits = std::to_string(i);
  if (static_cast<int>(digits.size()) < width) digits.insert(0, width - digits.size(), '0');
  return prefix + digits;
}

std::mt19937_64 subject_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

std::string canonical_shape(std::string_view shape) {
  if (shape == "rodent") return "rodent-imaging";
  if (shape == "human") return "human-assessment";
  if (shape == "rodent-imaging" || shape == "human-assessment" || shape == "heart-rate") return std::string(shape);
  throw std::invalid_argument("unknown graph shape '" + std::string(shape) + "'");
}

prov::SourceTable synth_rows(std::string_view shape_name, std::size_t first, std::size_t count, std::uint64_t seed) {
  std::string shape = canonical_shape(shape_name);
  prov::SourceTable t;
  if (shape == "rodent-imaging") {
    t.header = {"animalNumber", "species", "age", "condition", "region", "slice", "hemisphere", "area", "faMean"};
    for (std::size_t i = first; i < first + count; ++i) {
      auto rng = subject_rng(seed, i);
      std::string id = padded('R', i, 6);
      std::string age = std::to_string(std::uniform_int_distribution<int>(5, 60)(rng));
      std::string condition = std::bernoulli_distribution(0.5)(rng) ? "CES+" : "CES-";
      std::uniform_real_distribution<double> area(0.5, 5.0);
      std::uniform_real_distribution<double> fa(0.2, 0.6);
      for (const char* region : {"hippocampus", "amygdala"}) {
        for (const char* slice : {"1", "2"}) {
          for (const char* hemisphere : {"left", "right"}) {
            t.rows.push_back({id, "Sprague-Dawley", age, condition, region, slice, hemisphere, fixed(area(rng), 3),
                              fixed(fa(rng), 4)});
          }
        }
      }
    }
  } else if (shape == "human-assessment") {
    t.header = {"subjectID", "age"};
    for (std::size_t i = first; i < first + count; ++i) {
      auto rng = subject_rng(seed, i);
      t.rows.push_back({padded('H', i, 7), fixed(std::uniform_int_distribution<int>(0, 200)(rng) / 10.0, 1)});
    }
  } else {
    t.header = {"subjectID", "timePoint", "heartRate"};
    for (std::size_t i = first; i < first + count; ++i) {
      auto rng = subject_rng(seed, i);
      for (int tp = 1; tp <= 4; ++tp) {
        t.rows.push_back({padded('H', i, 7), std::to_string(tp),
                          std::to_string(std::uniform_int_distribution<int>(55, 110)(rng))});
      }
    }
  }
  return t;
}

std::size_t template_size(std::string_view shape) {
  auto schema = *prov::builtin_schema(canonical_shape(shape));
  return prov::transform(synth_rows(shape, 0, 1, 0), schema).size();
}

void synth_graph(rdf::GraphStore& store, std::string_view graph, std::size_t n, std::string_view shape,
                 std::uint64_t seed) {
  std::string name = canonical_shape(shape);
  auto schema = *prov::builtin_schema(name);
  const std::size_t k = template_size(name);
  if (n < k) {
    throw std::invalid_argument("graph size " + std::to_string(n) + " is below the " + name + " template size " +
                                std::to_string(k));
  }
  const std::size_t before = store.size(graph);
  const std::size_t whole = n / k;
  constexpr std::size_t kBatch = 2048;
  for (std::size_t first = 0; first < whole; first += kBatch) {
    std::size_t count = std::min(kBatch, whole - first);
    auto triples = prov::transform(synth_rows(name, first, count, seed), schema);
    if (triples.size() != count * k) throw std::logic_error("synthetic replica size drifted");
    store.insert_all(graph, triples);
  }
  if (std::size_t rest = n - whole * k; rest > 0) {
    auto triples = prov::transform(synth_rows(name, whole, 1, seed), schema);
    triples.resize(rest);
    store.insert_all(graph, triples);
  }
  store.ensure_graph(graph);
  if (store.size(graph) - before != n) throw std::logic_error("synthetic graph size mismatch");
}

}  // namespace semdd::bench
