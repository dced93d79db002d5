#pragma once

#include "cag/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cag {

/// Point of the unit circle, measured in turns: the angle theta equals
/// 2*pi*value with value an exact rational in [0, 1). Construction
/// normalizes modulo one turn.
class Angle {
public:
    Angle() = default;
    explicit Angle(const Rational& turns) : turns_(turns.mod1()) {}

    const Rational& turns() const { return turns_; }

    friend bool operator==(const Angle& a, const Angle& b) { return a.turns_ == b.turns_; }
    friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
        return a.turns_ <=> b.turns_;
    }

private:
    Rational turns_;
};

/// Counterclockwise separation from one angle to another, in [0, 1).
Rational ccw_delta(const Angle& from, const Angle& to);

/// Closed arc on the unit circle: either the full circle or the closed
/// set of angles traversed counterclockwise from start to end. An arc
/// with start == end is a single point.
class Arc {
public:
    static Arc full_circle();
    static Arc span(const Angle& start, const Angle& end);

    bool is_full() const { return full_; }
    bool is_point() const { return !full_ && start_ == end_; }
    const Angle& start() const { return start_; }
    const Angle& end() const { return end_; }

    /// Counterclockwise length in turns; 1 for the full circle.
    Rational length() const;

    bool contains(const Angle& a) const;

    /// Whether this arc's point set contains the other's.
    bool contains_arc(const Arc& other) const;

    friend bool operator==(const Arc& a, const Arc& b) {
        if (a.full_ != b.full_) return false;
        return a.full_ || (a.start_ == b.start_ && a.end_ == b.end_);
    }

private:
    Arc() = default;
    bool full_ = false;
    Angle start_;
    Angle end_;
};

bool intersects(const Arc& a, const Arc& b);

/// Ordered family of labeled arcs. Vertex i of the intersection graph
/// corresponds to arc i; labels are unique.
struct ArcFamily {
    std::vector<Arc> arcs;
    std::vector<std::string> labels;

    size_t size() const { return arcs.size(); }
    void push_back(Arc arc, std::string label);

    /// Throws input_error if labels are missing, duplicated or malformed.
    void validate() const;
};

bool covers_circle(const ArcFamily& fam);

/// An angle outside every arc of the family, when one exists; nullopt
/// exactly when the family covers the circle. The returned angle is the
/// smallest (by turn value) among the sweep's candidate gap points, so
/// repeated calls are deterministic.
std::optional<Angle> uncovered_point(const ArcFamily& fam);

/// Text format, one arc per line:
///   label a/b c/d     span arc from a/b to c/d turns, counterclockwise
///   label full        whole circle
/// '#' starts a comment. Writing then reading reproduces the family
/// exactly (angles are normalized into [0,1) and reduced).
ArcFamily read_arc_family(std::istream& in);
ArcFamily read_arc_family_file(const std::string& path);
void write_arc_family(std::ostream& out, const ArcFamily& fam);
std::string arc_family_to_string(const ArcFamily& fam);

}  // namespace cag
