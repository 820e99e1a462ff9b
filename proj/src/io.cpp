#include "cquiver/io.hpp"

#include <fstream>
#include <sstream>

namespace cquiver {

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>(), 1);
  return Rational::parse(j.get<std::string>());
}

bool flag(const Json& j, const char* key, bool required) {
  if (!j.contains(key)) {
    if (required) throw ParseError(std::string("missing field ") + key);
    return false;
  }
  return j.at(key).get<bool>();
}

Boundary boundary(bool closed) { return closed ? Boundary::Closed : Boundary::Open; }

// Grid index, "ninf" or "pinf".
std::int64_t grid_end_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "ninf") return GridIntervalOrbit::kNegInf;
    if (s == "pinf") return GridIntervalOrbit::kPosInf;
    throw ParseError("unknown endpoint token " + s);
  }
  const auto i = j.get<std::int64_t>();
  if (i == GridIntervalOrbit::kNegInf || i == GridIntervalOrbit::kPosInf) {
    throw ParseError("grid index out of range");
  }
  return i;
}

Json grid_end_to_json(std::int64_t i) {
  if (i == GridIntervalOrbit::kNegInf) return "ninf";
  if (i == GridIntervalOrbit::kPosInf) return "pinf";
  return i;
}

}  // namespace

Json to_json(const Endpoint& e) {
  switch (e.kind()) {
    case EndpointKind::NegInf:
      return {{"kind", "ninf"}};
    case EndpointKind::PosInf:
      return {{"kind", "pinf"}};
    case EndpointKind::Grid:
      return {{"kind", "grid"}, {"i", e.index()}};
    case EndpointKind::Gap:
      break;
  }
  return {{"kind", "gap"}, {"g", e.index()}, {"t", e.offset().str()}};
}

Json to_json(const Interval& iv) {
  return {{"lo", to_json(iv.lo())},
          {"lo_closed", iv.lo_closed()},
          {"hi", to_json(iv.hi())},
          {"hi_closed", iv.hi_closed()}};
}

Endpoint endpoint_from_json(const Json& j) {
  return guarded("endpoint", [&] {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "ninf") return Endpoint::neg_inf();
    if (kind == "pinf") return Endpoint::pos_inf();
    if (kind == "grid") return Endpoint::grid(j.at("i").get<std::int64_t>());
    if (kind == "gap") {
      return Endpoint::gap(j.at("g").get<std::int64_t>(), rational_from_json(j.at("t")));
    }
    throw ParseError("malformed endpoint: unknown kind " + kind);
  });
}

Interval interval_from_json(const Json& j) {
  return guarded("interval", [&] {
    const auto lo = endpoint_from_json(j.at("lo"));
    const auto hi = endpoint_from_json(j.at("hi"));
    return Interval(lo, boundary(flag(j, "lo_closed", !lo.is_infinite())), hi,
                    boundary(flag(j, "hi_closed", !hi.is_infinite())));
  });
}

Json to_json(const RepSpec& r) {
  Json quiver;
  if (r.quiver.shape() == QuiverShape::Cyclic) {
    quiver = {{"shape", "cyclic"}, {"m", r.quiver.period()}};
  } else {
    quiver = {{"shape", "linear"}, {"lo", r.quiver.lo()}, {"hi", r.quiver.hi()}};
  }
  Json mats = Json::object();
  for (std::size_t a = 0; a < r.mats.size(); ++a) {
    Json rows = Json::array();
    for (int i = 0; i < r.mats[a].rows(); ++i) {
      Json row = Json::array();
      for (int c = 0; c < r.mats[a].cols(); ++c) row.push_back(r.mats[a].at(i, c));
      rows.push_back(std::move(row));
    }
    mats[r.quiver.arrows()[a].name] = std::move(rows);
  }
  return {{"quiver", quiver}, {"dims", r.dims}, {"mats", mats}, {"p", r.prime}};
}

RepSpec rep_from_json(const Json& j) {
  return guarded("representation", [&] {
    const auto& q = j.at("quiver");
    const auto shape = q.at("shape").get<std::string>();
    std::optional<QuiverSpec> quiver;
    if (shape == "linear") {
      quiver = QuiverSpec::linear(q.at("lo").get<std::int64_t>(), q.at("hi").get<std::int64_t>());
    } else if (shape == "cyclic") {
      quiver = QuiverSpec::cyclic(q.at("m").get<int>());
    } else {
      throw ParseError("malformed representation: unknown quiver shape " + shape);
    }
    const int p = j.value("p", 2);
    auto rep = RepSpec::zero(*quiver, j.at("dims").get<std::vector<int>>(), p);
    const auto& mats = j.value("mats", Json::object());
    for (const auto& [name, rows] : mats.items()) {
      const int a = rep.quiver.arrow_index(name);
      if (a < 0) throw ParseError("malformed representation: unknown arrow " + name);
      auto& mat = rep.mats[a];
      if (rows.size() != static_cast<std::size_t>(mat.rows())) {
        throw ParseError("malformed representation: arrow " + name + " has wrong shape");
      }
      for (int r = 0; r < mat.rows(); ++r) {
        if (rows[r].size() != static_cast<std::size_t>(mat.cols())) {
          throw ParseError("malformed representation: arrow " + name + " has wrong shape");
        }
        for (int c = 0; c < mat.cols(); ++c) mat.set(r, c, rows[r][c].get<long long>());
      }
    }
    rep.validate();
    return rep;
  });
}

Json to_json(const OrbitInterval& o) {
  switch (o.kind()) {
    case OrbitKind::LeftRay:
      return {{"kind", "lray"}, {"d", o.anchor()}};
    case OrbitKind::RightRay:
      return {{"kind", "rray"}, {"c", o.anchor()}};
    case OrbitKind::Finite:
      break;
  }
  return {{"kind", "fin"}, {"a", o.anchor()}, {"len", o.length()}};
}

Json to_json(const OrbitSet& s) {
  Json orbits = Json::array();
  for (const auto& o : s.orbits()) orbits.push_back(to_json(o));
  return {{"m", s.period()}, {"orbits", orbits}};
}

OrbitSet orbit_set_from_json(const Json& j) {
  return guarded("orbit set", [&] {
    const int m = j.at("m").get<int>();
    std::vector<OrbitInterval> orbits;
    for (const auto& o : j.at("orbits")) {
      const auto kind = o.at("kind").get<std::string>();
      if (kind == "lray") {
        orbits.push_back(OrbitInterval::left_ray(m, o.at("d").get<std::int64_t>()));
      } else if (kind == "rray") {
        orbits.push_back(OrbitInterval::right_ray(m, o.at("c").get<std::int64_t>()));
      } else if (kind == "fin") {
        orbits.push_back(OrbitInterval::finite(m, o.at("a").get<std::int64_t>(),
                                               o.at("len").get<std::int64_t>()));
      } else {
        throw ParseError("malformed orbit set: unknown orbit kind " + kind);
      }
    }
    return OrbitSet(m, std::move(orbits));
  });
}

Json to_json(const AlphaRep& r) {
  Json grid = Json::array();
  for (const auto& x : r.grid.positions) grid.push_back(x.str());
  Json orbits = Json::array();
  for (const auto& o : r.orbits) {
    Json e = {{"lo", grid_end_to_json(o.lo)}, {"hi", grid_end_to_json(o.hi)}};
    if (!o.lo_infinite()) e["lo_closed"] = o.lo_b == Boundary::Closed;
    if (!o.hi_infinite()) e["hi_closed"] = o.hi_b == Boundary::Closed;
    orbits.push_back(std::move(e));
  }
  Json families = Json::array();
  for (const auto& f : r.families) {
    Json e = {{"gap", f.gap}, {"dir", f.dir == Direction::Left ? "left" : "right"}};
    switch (f.far.kind()) {
      case EndpointKind::NegInf:
        e["far"] = "ninf";
        break;
      case EndpointKind::PosInf:
        e["far"] = "pinf";
        break;
      case EndpointKind::Grid:
        e["far"] = f.far.index();
        break;
      case EndpointKind::Gap:
        e["far"] = to_json(f.far);
        break;
    }
    if (!f.far.is_infinite()) e["far_closed"] = f.far_b == Boundary::Closed;
    families.push_back(std::move(e));
  }
  Json out = {{"n", r.n()}, {"orbits", orbits}, {"families", families}};
  if (!grid.empty()) out["grid"] = grid;
  return out;
}

AlphaRep alpha_rep_from_json(const Json& j) {
  return guarded("alpha representation", [&] {
    AlphaRep r;
    r.grid.n = j.at("n").get<int>();
    if (r.grid.n < 1) throw ParseError("malformed alpha representation: n must be positive");
    if (j.contains("grid")) {
      for (const auto& x : j.at("grid")) r.grid.positions.push_back(rational_from_json(x));
    }
    for (const auto& o : j.value("orbits", Json::array())) {
      GridIntervalOrbit g;
      g.lo = grid_end_from_json(o.at("lo"));
      g.hi = grid_end_from_json(o.at("hi"));
      if (g.lo == GridIntervalOrbit::kPosInf || g.hi == GridIntervalOrbit::kNegInf) {
        throw ParseError("malformed alpha representation: infinite end on the wrong side");
      }
      g.lo_b = boundary(flag(o, "lo_closed", !g.lo_infinite()));
      g.hi_b = boundary(flag(o, "hi_closed", !g.hi_infinite()));
      r.orbits.push_back(g);
    }
    for (const auto& f : j.value("families", Json::array())) {
      FamilySpec spec;
      spec.gap = f.at("gap").get<std::int64_t>();
      const auto dir = f.at("dir").get<std::string>();
      if (dir == "left") {
        spec.dir = Direction::Left;
      } else if (dir == "right") {
        spec.dir = Direction::Right;
      } else {
        throw ParseError("malformed alpha representation: unknown direction " + dir);
      }
      const auto& far = f.at("far");
      if (far.is_object()) {
        spec.far = endpoint_from_json(far);
      } else {
        const auto i = grid_end_from_json(far);
        spec.far = i == GridIntervalOrbit::kNegInf   ? Endpoint::neg_inf()
                   : i == GridIntervalOrbit::kPosInf ? Endpoint::pos_inf()
                                                     : Endpoint::grid(i);
      }
      spec.far_b = boundary(flag(f, "far_closed", !spec.far.is_infinite()));
      r.families.push_back(spec);
    }
    return r;
  });
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed json: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

std::string to_tsv(const std::vector<OrbitSet>& sets) {
  std::ostringstream out;
  out << "# index\tm\tside\torbits\n";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto& s = sets[i];
    out << i << '\t' << s.period() << '\t' << (s.has_left_ray() ? "left" : "right") << '\t';
    for (std::size_t k = 0; k < s.orbits().size(); ++k) {
      out << (k ? " " : "") << s.orbits()[k].str();
    }
    out << '\n';
  }
  return out.str();
}

std::string to_tsv(const std::vector<AlphaRep>& reps) {
  std::ostringstream out;
  out << "# index\tn\torbits\tfamilies\tlattice\n";
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto& r = reps[i];
    out << i << '\t' << r.n() << '\t';
    for (std::size_t k = 0; k < r.orbits.size(); ++k) {
      out << (k ? " " : "") << r.orbits[k].at(0).str();
    }
    out << '\t';
    for (std::size_t k = 0; k < r.families.size(); ++k) {
      const auto& f = r.families[k];
      out << (k ? " " : "") << f.gap << ':' << (f.dir == Direction::Left ? "left" : "right")
          << ':' << f.far.str() << ':' << (f.far_b == Boundary::Closed ? "closed" : "open");
    }
    out << '\t' << tau(r).str() << '\n';
  }
  return out.str();
}

}  // namespace cquiver
