#pragma once

namespace hz::config {

// Maximum number of tuples an exhaustive enumeration may visit.
long long& enumeration_budget();  // default 100'000'000

// Maximum tracked degree for power-sum series.
int& degree_cap();  // default 10

// Largest degree for which a full character table may be built.
int& character_table_cap();  // default 12

}  // namespace hz::config
