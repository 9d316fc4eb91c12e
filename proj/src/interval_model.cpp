#include "ipc/interval_model.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "ipc/errors.hpp"

namespace ipc {

IntervalModel::IntervalModel(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    std::unordered_set<std::string> seen;
    for (const auto& iv : intervals_) {
        if (iv.right < iv.left) {
            throw std::invalid_argument("interval '" + iv.id + "' has left > right");
        }
        if (!seen.insert(iv.id).second) {
            throw std::invalid_argument("duplicate interval id '" + iv.id + "'");
        }
    }
}

IntervalModel IntervalModel::parse(std::istream& in) {
    std::vector<Interval> intervals;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string id, left, right, extra;
        if (!(fields >> id)) continue;
        if (!(fields >> left >> right) || (fields >> extra)) {
            throw ParseError(line_no, "expected '<id> <left> <right>'");
        }
        try {
            intervals.push_back({id, Rational::parse(left), Rational::parse(right)});
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    }
    try {
        return IntervalModel(std::move(intervals));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

void IntervalModel::write(std::ostream& out) const {
    for (const auto& iv : intervals_) {
        out << iv.id << ' ' << iv.left.str() << ' ' << iv.right.str() << '\n';
    }
}

}  // namespace ipc
