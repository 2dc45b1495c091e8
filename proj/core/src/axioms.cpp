#include "udval/axioms.hpp"

#include <sstream>

#include "udval/enumeration.hpp"

namespace udval {

std::string axiom_report_csv_header() {
  return "axiom,kind,status,coalition,player_i,player_j,lhs,rhs,discrepancy,note";
}

std::string to_csv_row(const AxiomReport& report) {
  std::ostringstream out;
  out << report.axiom << ',' << report.value_kind << ',' << to_string(report.status) << ','
      << report.coalition << ',' << report.player_i << ',' << report.player_j << ',';
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", report.lhs);
  out << buffer << ',';
  std::snprintf(buffer, sizeof(buffer), "%.12g", report.rhs);
  out << buffer << ',';
  std::snprintf(buffer, sizeof(buffer), "%.12g", report.discrepancy);
  out << buffer << ',' << report.note;
  return out.str();
}

std::vector<AxiomReport> audit_game(const IncompleteGame<double>& g, std::uint64_t seed) {
  std::vector<AxiomReport> reports;
  const ValueKind kinds[] = {ValueKind::ud, ValueKind::r, ValueKind::ic};
  for (ValueKind kind : kinds) {
    reports.push_back(check_efficiency(kind, g));
    reports.push_back(check_additivity(
        kind, g, random_game(g.system(), derive_seed(seed, 0xadd171ULL, 0))));
    reports.push_back(check_equality(kind, g, g));
    reports.push_back(check_phi_consistency(kind, g));
    for (Coalition s : g.system().members()) {
      if (s == kEmptyCoalition || s == g.system().grand()) continue;
      reports.push_back(check_fairness(kind, g, s));
    }
    for (int i = 1; i <= g.players(); ++i) {
      for (int j = i + 1; j <= g.players(); ++j) {
        reports.push_back(check_balanced_contributions(kind, g, i, j));
      }
    }
    for (Coalition p : find_partner_coalitions(g)) {
      reports.push_back(check_symmetric_partnership(kind, g, p));
    }
  }
  // The weakened Shapley axioms apply to complete games in the UD class; the
  // UD completion of the audited game is the canonical member.
  if (value_defined_on(g.system(), ValueKind::ud) && is_intersection_closed(g.system())) {
    const CompleteGame<double> completion = special_game(g, ValueKind::ud);
    reports.push_back(check_ud_class_axiom(completion, g.system(), UdClassAxiom::null_player));
    reports.push_back(check_ud_class_axiom(completion, g.system(), UdClassAxiom::equal_treatment));
  }
  return reports;
}

}  // namespace udval
