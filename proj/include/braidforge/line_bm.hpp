#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "braidforge/factorization.hpp"
#include "braidforge/plan.hpp"

namespace braidforge {

enum class EventKind { branch, node, tangent, kfold };

// How a skeleton passes an intermediate fiber position; `gap` marks a position
// occupied by a complex pair created by an earlier branch event.
enum class Pass { below, above, gap };

struct SingularEvent {
  EventKind kind = EventKind::node;
  int a = 0;  // first skeleton point (1-based)
  int b = 0;  // last skeleton point; for kfold the block is a..b
  std::vector<Pass> sides;  // one entry per position strictly between a and b

  int epsilon() const;
};

struct EventList {
  int n = 0;
  std::vector<SingularEvent> events;

  void validate() const;
};

class UnsupportedEvent : public Error {
 public:
  using Error::Error;
};

// Pushes every skeleton through the Lefschetz diffeomorphisms of the earlier
// events and emits Delta<xi_j>^{epsilon_j}, one factor per event.
Factorization lefschetz_pipeline(const EventList& e);

// prod_{i=m}^{1} C~_i Delta^2_i on ell strands: parasitic nodes and localized vertex twists.
Factorization degenerate_bmf(const DegenerationPlan& p);

// The diffeomorphism of a non-branch event as a braid: H(lambda)^{epsilon/2}.
BraidWord lefschetz_delta(const SingularEvent& ev, int n);

EventList event_list_from_json(const nlohmann::json& j);
nlohmann::json to_json(const EventList& e);

EventKind parse_event_kind(const std::string& s);
std::string event_kind_name(EventKind k);

}  // namespace braidforge
