// Builds S3 from the inversion action of Z2 on Z3, checks it, and
// extracts the action back.

#include <iostream>

#include "sbp/sbp.hpp"

int main() {
  using namespace sbp;

  auto const action = catalog::inversion_action();
  auto const syn    = synthesize(action).value();
  auto const& sb    = syn.semibiproduct;

  std::cout << "A = " << sb.A().name() << ", order " << sb.A().size()
            << ", group: " << (sb.A().is_group() ? "yes" : "no")
            << ", commutative: " << (sb.A().is_commutative() ? "yes" : "no")
            << "\n"
            << sb.A();

  std::cout << "Schreier: " << (is_schreier(sb) ? "yes" : "no") << "\n";
  std::cout << "decomposition: "
            << (decomposition_check(sb) ? "holds" : "fails") << "\n";

  auto const back = extract_pseudo_action(sb);
  std::cout << "round trip recovers the action: "
            << (back == action ? "yes" : "no") << "\n";

  // The three-element relation example: a semi-biproduct that is not
  // Schreier.
  auto const e1 = catalog::chain_bundle().verify().value();
  std::cout << "chain example Schreier: " << (is_schreier(e1) ? "yes" : "no")
            << "\n";
  return 0;
}
