#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gfm {

/// Membership bit-set over frame indices; bit i set means element i belongs.
using Mask = std::uint32_t;

enum class FrameRole { parameter, observation, source };

std::string_view to_string(FrameRole role);

class Subset;

/// An ordered finite set of distinct labels playing one of three roles: the
/// parameter space, the observation space, or the random source.
///
/// Frames are immutable and cheap to copy. Two frames compare equal when their
/// labels (in order) and roles are equal.
class Frame {
 public:
  static constexpr std::size_t kMaxSize = 20;

  /// Throws ValidationError when `labels` is empty, longer than kMaxSize, or
  /// contains an empty or repeated label.
  Frame(std::vector<std::string> labels, FrameRole role);

  std::size_t size() const { return data_->labels.size(); }
  FrameRole role() const { return data_->role; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(std::size_t index) const { return data_->labels.at(index); }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Like find() but throws ValidationError for unknown labels.
  std::size_t index_of(std::string_view label) const;

  Mask full_mask() const { return size() == 32 ? ~Mask{0} : ((Mask{1} << size()) - 1); }

  Subset empty_set() const;
  Subset full_set() const;
  Subset singleton(std::size_t index) const;
  Subset subset(Mask bits) const;
  Subset subset(const std::vector<std::string>& labels) const;

  friend bool operator==(const Frame& a, const Frame& b);

 private:
  struct Data {
    std::vector<std::string> labels;
    FrameRole role;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

/// A subset of a frame. Binary operations require both operands to share a
/// frame and throw FrameMismatch otherwise.
class Subset {
 public:
  Subset(Frame frame, Mask bits);

  const Frame& frame() const { return frame_; }
  Mask bits() const { return bits_; }

  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool contains(std::size_t index) const { return index < 32 && ((bits_ >> index) & 1U) != 0; }
  std::vector<std::size_t> indices() const;

  Subset complement() const { return Subset(frame_, frame_.full_mask() & ~bits_); }
  bool is_subset_of(const Subset& other) const;

  /// "{a,b}" in frame order; the empty set prints as "{}".
  std::string str() const;

  friend Subset operator&(const Subset& a, const Subset& b);
  friend Subset operator|(const Subset& a, const Subset& b);
  friend bool operator==(const Subset& a, const Subset& b);

 private:
  Frame frame_;
  Mask bits_;
};

/// Throws FrameMismatch with `what` as context when the frames differ.
void require_same_frame(const Frame& a, const Frame& b, std::string_view what);

}  // namespace gfm
