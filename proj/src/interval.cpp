#include "rdl/interval.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace rdl {

IntervalPartition IntervalPartition::from_sizes(std::vector<std::uint64_t> sizes) {
  if (sizes.empty()) throw ParamError("interval partition: no intervals");
  IntervalPartition p;
  p.sizes_ = std::move(sizes);
  p.ends_.reserve(p.sizes_.size());
  std::uint64_t acc = 0;
  for (std::uint64_t s : p.sizes_) {
    if (s == 0) throw ParamError("interval partition: empty interval");
    acc += s;
    p.ends_.push_back(acc);
  }
  return p;
}

std::size_t IntervalPartition::index_of(std::uint64_t v) const {
  if (v == 0 || v > total()) throw ParamError("interval partition: vertex outside partition");
  auto it = std::lower_bound(ends_.begin(), ends_.end(), v);
  return static_cast<std::size_t>(it - ends_.begin());
}

std::vector<Ratio> IntervalPartition::ratios() const {
  std::vector<Ratio> r;
  r.reserve(sizes_.size());
  for (std::size_t i = 0; i < sizes_.size(); ++i)
    r.push_back(Ratio(static_cast<std::int64_t>(sizes_[i]), static_cast<std::int64_t>(ends_[i])));
  return r;
}

bool IntervalPartition::fast_growing_at_scale() const {
  auto r = ratios();
  for (std::size_t i = 2; i < r.size(); ++i)
    if (r[i] < r[i - 1]) return false;
  return true;
}

IntervalPartition PartitionDesc::instantiate(std::uint64_t cover) const {
  std::vector<std::uint64_t> s;
  std::uint64_t acc = 0;
  switch (kind) {
    case Kind::Sizes:
      s = sizes;
      for (std::uint64_t x : s) acc += x;
      if (acc < cover) throw ParamError("interval partition: explicit sizes do not cover prefix");
      break;
    case Kind::Geometric: {
      if (first == 0 || ratio < 2) throw ParamError("geometric partition needs first >= 1, ratio >= 2");
      std::uint64_t cur = first;
      while (acc < cover) {
        s.push_back(cur);
        acc += cur;
        if (cur > (UINT64_MAX / ratio)) throw ParamError("geometric partition overflow");
        cur *= ratio;
      }
      break;
    }
    case Kind::Factorial: {
      if (scale == 0) throw ParamError("factorial partition needs scale >= 1");
      std::uint64_t cur = scale;
      std::uint64_t i = 1;
      while (acc < cover) {
        s.push_back(cur);
        acc += cur;
        ++i;
        if (cur > UINT64_MAX / i) throw ParamError("factorial partition overflow");
        cur *= i;
      }
      break;
    }
  }
  return IntervalPartition::from_sizes(std::move(s));
}

nlohmann::json PartitionDesc::to_json() const {
  nlohmann::json j;
  switch (kind) {
    case Kind::Sizes:
      j["sizes"] = sizes;
      break;
    case Kind::Geometric:
      j["profile"] = "geometric";
      j["first"] = first;
      j["ratio"] = ratio;
      break;
    case Kind::Factorial:
      j["profile"] = "factorial";
      j["scale"] = scale;
      break;
  }
  return j;
}

PartitionDesc PartitionDesc::from_json(const nlohmann::json& j) {
  PartitionDesc d;
  if (j.contains("sizes")) {
    d.kind = Kind::Sizes;
    d.sizes = j.at("sizes").get<std::vector<std::uint64_t>>();
    return d;
  }
  const std::string profile = j.at("profile").get<std::string>();
  if (profile == "geometric") {
    d.kind = Kind::Geometric;
    d.first = j.value("first", std::uint64_t{1});
    d.ratio = j.value("ratio", std::uint64_t{2});
  } else if (profile == "factorial") {
    d.kind = Kind::Factorial;
    d.scale = j.value("scale", std::uint64_t{1});
  } else {
    throw ParamError("unknown partition profile: " + profile);
  }
  return d;
}

}  // namespace rdl
