#include "braidforge/line_bm.hpp"

namespace braidforge {

int SingularEvent::epsilon() const {
  switch (kind) {
    case EventKind::branch:
      return 1;
    case EventKind::node:
      return 2;
    case EventKind::tangent:
      return 4;
    case EventKind::kfold:
      return 2;
  }
  return 0;
}

void EventList::validate() const {
  if (n < 2) throw Error("EventList: fewer than two fiber points");
  for (std::size_t j = 0; j < events.size(); ++j) {
    const auto& ev = events[j];
    std::string where = "EventList: event " + std::to_string(j + 1);
    if (ev.a < 1 || ev.b > n || ev.a >= ev.b) throw Error(where + " references points not in fiber");
    if (ev.kind == EventKind::kfold) {
      if (!ev.sides.empty()) throw Error(where + ": k-fold block takes no sides");
    } else if (static_cast<int>(ev.sides.size()) != ev.b - ev.a - 1) {
      throw Error(where + ": side count does not match skeleton length");
    }
    if (ev.kind == EventKind::branch && ev.b != ev.a + 1)
      throw Error(where + ": branch skeleton must join adjacent points");
  }
}

namespace {

std::vector<Side> resolved_sides(const SingularEvent& ev) {
  std::vector<Side> out;
  for (Pass p : ev.sides) {
    if (p == Pass::gap) throw UnsupportedEvent("skeleton passes a complex pair not created by a branch event");
    out.push_back(p == Pass::below ? Side::below : Side::above);
  }
  return out;
}

}  // namespace

BraidWord lefschetz_delta(const SingularEvent& ev, int n) {
  switch (ev.kind) {
    case EventKind::node:
    case EventKind::tangent:
      return compile_sides(n, ev.a, ev.b, resolved_sides(ev)).expand().pow(ev.epsilon() / 2);
    case EventKind::kfold:
      return block_delta(n, ev.a, ev.b - ev.a + 1);
    case EventKind::branch:
      break;
  }
  throw UnsupportedEvent("branch events act by a quarter twist, not a braid");
}

Factorization lefschetz_pipeline(const EventList& e) {
  e.validate();
  Factorization out;
  out.strands = e.n;
  for (std::size_t j = 0; j < e.events.size(); ++j) {
    SingularEvent lambda = e.events[j];
    // W = delta_{j-1} ... delta_1, applied after the branch quarter twists.
    BraidWord w(e.n);
    bool conjugated = false;
    for (std::size_t m = j; m-- > 0;) {
      const auto& prev = e.events[m];
      if (prev.kind == EventKind::branch) {
        int p = prev.a;
        bool touches = false;
        if (p > lambda.a && p + 1 < lambda.b) {
          Pass& s1 = lambda.sides[p - lambda.a - 1];
          Pass& s2 = lambda.sides[p - lambda.a];
          if (s1 == Pass::gap && s2 == Pass::gap) {
            s1 = Pass::above;
            s2 = Pass::below;
            touches = true;
          } else if (s1 == Pass::gap || s2 == Pass::gap) {
            throw UnsupportedEvent("skeleton enters a complex pair on one side only");
          }
        }
        if (p == lambda.a || p + 1 == lambda.a || p == lambda.b || p + 1 == lambda.b)
          throw UnsupportedEvent("skeleton ends on a complex pair");
        if (touches && conjugated)
          throw UnsupportedEvent("branch quarter twist after a conjugation is not supported");
        continue;
      }
      w *= lefschetz_delta(prev, e.n);
      conjugated = true;
    }
    BraidWord winv = w.inverse();
    Factor f;
    if (lambda.kind == EventKind::kfold) {
      f = Factor{e.n, winv.reduced(), lambda.a, lambda.b - lambda.a + 1, 1, OriginTag::event(static_cast<int>(j + 1))};
      f.exponent = 2;
    } else {
      HalfTwist h = compile_sides(e.n, lambda.a, lambda.b, resolved_sides(lambda));
      f = Factor::from_half_twist(h, lambda.epsilon(), OriginTag::event(static_cast<int>(j + 1)));
      f = f.conjugated_by(winv);
    }
    std::string notation = event_kind_name(lambda.kind) + "<" + std::to_string(lambda.a) + "," +
                           std::to_string(lambda.b) + ">";
    out.append_block("x" + std::to_string(j + 1), notation, {f});
  }
  return out;
}

EventKind parse_event_kind(const std::string& s) {
  if (s == "branch") return EventKind::branch;
  if (s == "node") return EventKind::node;
  if (s == "tangent") return EventKind::tangent;
  if (s == "kfold" || s == "k_fold") return EventKind::kfold;
  throw ParseError("unknown event kind '" + s + "'");
}

std::string event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::branch:
      return "branch";
    case EventKind::node:
      return "node";
    case EventKind::tangent:
      return "tangent";
    case EventKind::kfold:
      return "kfold";
  }
  return "?";
}

EventList event_list_from_json(const nlohmann::json& j) {
  try {
    EventList e;
    e.n = j.at("n").get<int>();
    for (const auto& x : j.at("events")) {
      SingularEvent ev;
      ev.kind = parse_event_kind(x.at("kind").get<std::string>());
      auto pts = x.at("points").get<std::vector<int>>();
      if (pts.size() < 2) throw ParseError("event needs at least two points");
      ev.a = pts.front();
      ev.b = pts.back();
      if (ev.kind == EventKind::kfold) {
        for (std::size_t i = 1; i < pts.size(); ++i)
          if (pts[i] != pts[i - 1] + 1) throw ParseError("k-fold points must be contiguous");
      } else {
        if (pts.size() != 2) throw ParseError("skeleton takes two endpoints");
        std::vector<std::string> sides;
        if (x.contains("skeleton")) sides = x.at("skeleton").at("sides").get<std::vector<std::string>>();
        else sides.assign(static_cast<std::size_t>(std::max(0, ev.b - ev.a - 1)), "below");
        for (const auto& s : sides) {
          if (s == "below") ev.sides.push_back(Pass::below);
          else if (s == "above") ev.sides.push_back(Pass::above);
          else if (s == "gap") ev.sides.push_back(Pass::gap);
          else throw ParseError("bad side '" + s + "'");
        }
      }
      e.events.push_back(ev);
    }
    e.validate();
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("event list json: ") + ex.what());
  } catch (const UnsupportedEvent&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& ex) {
    throw ParseError(ex.what());
  }
}

nlohmann::json to_json(const EventList& e) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& ev : e.events) {
    std::vector<int> pts;
    if (ev.kind == EventKind::kfold) {
      for (int p = ev.a; p <= ev.b; ++p) pts.push_back(p);
    } else {
      pts = {ev.a, ev.b};
    }
    nlohmann::json x = {{"kind", event_kind_name(ev.kind)}, {"points", pts}};
    if (!ev.sides.empty()) {
      std::vector<std::string> sides;
      for (Pass p : ev.sides) sides.push_back(p == Pass::below ? "below" : p == Pass::above ? "above" : "gap");
      x["skeleton"] = {{"sides", sides}};
    }
    events.push_back(x);
  }
  return {{"n", e.n}, {"events", events}};
}

}  // namespace braidforge
