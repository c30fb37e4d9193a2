#include "gfm/frame.hpp"

#include "gfm/errors.hpp"

namespace gfm {

std::string_view to_string(FrameRole role) {
  switch (role) {
    case FrameRole::parameter: return "parameter";
    case FrameRole::observation: return "observation";
    case FrameRole::source: return "source";
  }
  return "unknown";
}

Frame::Frame(std::vector<std::string> labels, FrameRole role) {
  if (labels.empty()) throw ValidationError("frame must not be empty");
  if (labels.size() > kMaxSize) {
    throw ValidationError("frame has " + std::to_string(labels.size()) +
                          " elements; at most " + std::to_string(kMaxSize) + " are supported");
  }
  auto data = std::make_shared<Data>();
  data->role = role;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw ValidationError("frame labels must be non-empty");
    if (!data->index.emplace(labels[i], i).second) {
      throw ValidationError("duplicate frame label '" + labels[i] + "'");
    }
  }
  data->labels = std::move(labels);
  data_ = std::move(data);
}

std::optional<std::size_t> Frame::find(std::string_view label) const {
  const auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Frame::index_of(std::string_view label) const {
  if (const auto i = find(label)) return *i;
  throw ValidationError("unknown " + std::string(to_string(role())) + " label '" +
                        std::string(label) + "'");
}

Subset Frame::empty_set() const { return Subset(*this, 0); }
Subset Frame::full_set() const { return Subset(*this, full_mask()); }
Subset Frame::singleton(std::size_t index) const {
  if (index >= size()) throw ValidationError("frame index out of range");
  return Subset(*this, Mask{1} << index);
}
Subset Frame::subset(Mask bits) const { return Subset(*this, bits); }

Subset Frame::subset(const std::vector<std::string>& labels) const {
  Mask bits = 0;
  for (const auto& l : labels) bits |= Mask{1} << index_of(l);
  return Subset(*this, bits);
}

bool operator==(const Frame& a, const Frame& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->role == b.data_->role && a.data_->labels == b.data_->labels;
}

Subset::Subset(Frame frame, Mask bits) : frame_(std::move(frame)), bits_(bits) {
  if ((bits_ & ~frame_.full_mask()) != 0) {
    throw ValidationError("subset has members outside its frame");
  }
}

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < frame_.size(); ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_frame(frame_, other.frame_, "subset test");
  return (bits_ & ~other.bits_) == 0;
}

std::string Subset::str() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : indices()) {
    if (!first) out += ",";
    out += frame_.label(i);
    first = false;
  }
  return out + "}";
}

Subset operator&(const Subset& a, const Subset& b) {
  require_same_frame(a.frame_, b.frame_, "intersection");
  return Subset(a.frame_, a.bits_ & b.bits_);
}

Subset operator|(const Subset& a, const Subset& b) {
  require_same_frame(a.frame_, b.frame_, "union");
  return Subset(a.frame_, a.bits_ | b.bits_);
}

bool operator==(const Subset& a, const Subset& b) {
  return a.bits_ == b.bits_ && a.frame_ == b.frame_;
}

void require_same_frame(const Frame& a, const Frame& b, std::string_view what) {
  if (!(a == b)) throw FrameMismatch(std::string(what) + ": operands are over different frames");
}

}  // namespace gfm
