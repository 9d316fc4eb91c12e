#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ipc/rational.hpp"

namespace ipc {

struct Interval {
    std::string id;
    Rational left;
    Rational right;

    [[nodiscard]] bool intersects(const Interval& other) const {
        return !(right < other.left || other.right < left);
    }
};

// Intersection model of an interval graph. Closed intervals; touching endpoints intersect.
class IntervalModel {
public:
    IntervalModel() = default;
    // Throws std::invalid_argument on left > right or duplicate ids.
    explicit IntervalModel(std::vector<Interval> intervals);

    [[nodiscard]] const std::vector<Interval>& intervals() const { return intervals_; }
    [[nodiscard]] std::size_t size() const { return intervals_.size(); }
    [[nodiscard]] bool empty() const { return intervals_.empty(); }
    [[nodiscard]] const Interval& operator[](std::size_t i) const { return intervals_[i]; }

    // `<id> <left> <right>` per line, '#' starts a comment. Throws ParseError.
    static IntervalModel parse(std::istream& in);
    void write(std::ostream& out) const;

private:
    std::vector<Interval> intervals_;
};

}  // namespace ipc
