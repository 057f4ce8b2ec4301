// Built-in worked example: a four-host LAN where one host announces its
// true binding and the attacker then announces a falsified one, with the
// golden copy of the table journals the run must produce.

#ifndef ARPIDS_EXAMPLE_HPP
#define ARPIDS_EXAMPLE_HPP

#include <string>

#include "arpids/scenario.hpp"

namespace arpids {

// Hosts: A (protected), B, C and attacker D. B sends a gratuitous reply
// announcing IP(B)-MAC(B); D sends a gratuitous reply announcing
// IP(C)-MAC(D) and answers the resulting probe consistently, faster than
// C does.
Scenario example_scenario();

// Expected snapshot at the end of the run: request-sent journal empty,
// five response rows, two verification rows, one authenticated binding.
std::string example_golden_snapshot();

}  // namespace arpids

#endif
