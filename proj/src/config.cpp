#include "hz/config.hpp"

namespace hz::config {

long long& enumeration_budget()
{
    static long long value = 100'000'000;
    return value;
}

int& degree_cap()
{
    static int value = 10;
    return value;
}

int& character_table_cap()
{
    static int value = 12;
    return value;
}

}  // namespace hz::config
