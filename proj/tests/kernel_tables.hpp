#pragma once

#include <string>
#include <vector>

// Entries of the three worked N = 4 examples: M, M' and M'' for
// (vb+vc, vda) = (1, 0), (17, 2) and (5, 8). Truncated columns are omitted.
namespace kernel_tables {

using Table = std::vector<std::vector<std::string>>;

inline const Table kM_1_0 = {
    {"1", "2", "3", "4", "5"},
    {"1", "q + 3", "2q + 4", "3q + 5", "4q + 6"},
    {"2", "q + 4", "q^2 + 3q + 5", "2q^2 + 4q + 6", "3q^2 + 5q + 7"},
    {"2", "2q + 5", "q^2 + 4q + 6", "q^3 + 3q^2 + 5q + 7", "2q^3 + 4q^2 + 6q + 8"},
    {"3", "2q + 6", "2q^2 + 5q + 7", "q^3 + 4q^2 + 6q + 8", "q^4 + 3q^3 + 5q^2 + 7q + 9"},
    {"3", "3q + 7", "2q^2 + 6q + 8", "2q^3 + 5q^2 + 7q + 9", "q^4 + 4q^3 + 6q^2 + 8q + 10"},
};
inline const Table kM1_1_0 = {
    {"1", "2", "3", "4", "5"},
    {"0", "q + 1", "2q + 1", "3q + 1", "4q + 1"},
    {"1", "1", "q^2 + q + 1", "2q^2 + q + 1", "3q^2 + q + 1"},
    {"0", "q + 1", "q + 1", "q^3 + q^2 + q + 1", "2q^3 + q^2 + q + 1"},
    {"1", "1", "q^2 + q + 1", "q^2 + q + 1", "q^4 + q^3 + q^2 + q + 1"},
    {"0", "q + 1", "q + 1", "q^3 + q^2 + q + 1", "q^3 + q^2 + q + 1"},
};
inline const Table kM2_1_0 = {
    {"1", "2", "3", "4", "5"},
    {"0", "q + 1", "2q + 1", "3q + 1", "4q + 1"},
    {"0", "-1", "q^2 + q - 2", "2q^2 + q - 3", "3q^2 + q - 4"},
    {"0", "0", "-q", "q^3 + q^2 - 2q", "2q^3 + q^2 - 3q"},
    {"0", "0", "0", "-q^2", "q^4 + q^3 - 2q^2"},
    {"0", "0", "0", "0", "-q^3"},
};

inline const Table kM_17_2 = {
    {"9", "10", "11"},
    {"8q + 10", "9q + 11", "10q + 12"},
    {"7q^2 + 9q + 11", "8q^2 + 10q + 12", "9q^2 + 11q + 13"},
    {"q^2 + 10q + 12", "7q^3 + 9q^2 + 11q + 13", "8q^3 + 10q^2 + 12q + 14"},
    {"8q^2 + 11q + 13", "q^3 + 10q^2 + 12q + 14", "7q^4 + 9q^3 + 11q^2 + 13q + 15"},
    {"2q^2 + 12q + 14", "8q^3 + 11q^2 + 13q + 15", "q^4 + 10q^3 + 12q^2 + 14q + 16"},
    {"9q^2 + 13q + 15", "2q^3 + 12q^2 + 14q + 16", "8q^4 + 11q^3 + 13q^2 + 15q + 17"},
    {"3q^2 + 14q + 16", "9q^3 + 13q^2 + 15q + 17", "2q^4 + 12q^3 + 14q^2 + 16q + 18"},
};
inline const Table kM1_17_2 = {
    {"9", "10", "11", "12"},
    {"8q + 1", "9q + 1", "10q + 1", "11q + 1"},
    {"7q^2 + q + 1", "8q^2 + q + 1", "9q^2 + q + 1", "10q^2 + q + 1"},
    {"-6q^2 + q + 1", "7q^3 + q^2 + q + 1", "8q^3 + q^2 + q + 1", "9q^3 + q^2 + q + 1"},
    {"7q^2 + q + 1", "-6q^3 + q^2 + q + 1", "7q^4 + q^3 + q^2 + q + 1", "8q^4 + ... + 1"},
    {"-6q^2 + q + 1", "7q^3 + q^2 + q + 1", "-6q^4 + q^3 + q^2 + q + 1", "7q^5 + ... + 1"},
    {"7q^2 + q + 1", "-6q^3 + q^2 + q + 1", "7q^4 + q^3 + q^2 + q + 1", "-6q^5 + ... + 1"},
    {"-6q^2 + q + 1", "7q^3 + q^2 + q + 1", "-6q^4 + q^3 + q^2 + q + 1", "7q^5 + ... + 1"},
};
inline const Table kM2_17_2 = {
    {"9", "10", "11", "12", "13"},
    {"8q + 1", "9q + 1", "10q + 1", "11q + 1", "12q + 1"},
    {"7q^2 + q - 8", "8q^2 + q - 9", "9q^2 + q - 10", "10q^2 + q - 11", "11q^2 + q - 12"},
    {"-6q^2 - 7q", "7q^3 + q^2 - 8q", "8q^3 + q^2 - 9q", "9q^3 + q^2 - 10q", "10q^3 + q^2 - 11q"},
    {"0", "-6q^3 - 7q^2", "7q^4 + q^3 - 8q^2", "8q^4 + q^3 - 9q^2", "9q^4 + q^3 - 10q^2"},
    {"0", "0", "-6q^4 - 7q^3", "7q^5 + q^4 - 8q^3", "8q^5 + q^4 - 9q^3"},
    {"0", "0", "0", "-6q^5 - 7q^4", "7q^6 + q^5 - 8q^4"},
    {"0", "0", "0", "0", "-6q^6 - 7q^5"},
};

inline const Table kM_5_8 = {
    {"3", "4", "5"},
    {"2q + 4", "3q + 5", "4q + 6"},
    {"q^2 + 3q + 5", "2q^2 + 4q + 6", "3q^2 + 5q + 7"},
    {"2q^2 + 4q + 6", "q^3 + 3q^2 + 5q + 7", "2q^3 + 4q^2 + 6q + 8"},
    {"3q^2 + 5q + 7", "2q^3 + 4q^2 + 6q + 8", "q^4 + 3q^3 + 5q^2 + 7q + 9"},
    {"4q^2 + 6q + 8", "3q^3 + 5q^2 + 7q + 9", "2q^4 + 4q^3 + 6q^2 + 8q + 10"},
    {"5q^2 + 7q + 9", "4q^3 + 6q^2 + 8q + 10", "3q^4 + 5q^3 + 7q^2 + 9q + 11"},
    {"6q^2 + 8q + 10", "5q^3 + 7q^2 + 9q + 11", "4q^4 + 6q^3 + 8q^2 + 10q + 12"},
};
inline const Table kM1_5_8 = {
    {"3", "4", "5", "6", "7"},
    {"2q + 1", "3q + 1", "4q + 1", "5q + 1", "6q + 1"},
    {"q^2 + q + 1", "2q^2 + q + 1", "3q^2 + q + 1", "4q^2 + q + 1", "5q^2 + q + 1"},
    {"q^2 + q + 1", "q^3 + q^2 + q + 1", "2q^3 + q^2 + q + 1", "3q^3 + q^2 + q + 1", "4q^3 + q^2 + q + 1"},
    {"q^2 + q + 1", "q^3 + q^2 + q + 1", "q^4 + ... + 1", "2q^4 + ... + 1", "3q^4 + ... + 1"},
    {"q^2 + q + 1", "q^3 + q^2 + q + 1", "q^4 + ... + 1", "q^5 + ... + 1", "2q^5 + ... + 1"},
    {"q^2 + q + 1", "q^3 + q^2 + q + 1", "q^4 + ... + 1", "q^5 + ... + 1", "q^6 + ... + 1"},
    {"q^2 + q + 1", "q^3 + q^2 + q + 1", "q^4 + ... + 1", "q^5 + ... + 1", "q^6 + ... + 1"},
};
inline const Table kM2_5_8 = {
    {"3", "4", "5", "6", "7"},
    {"2q + 1", "3q + 1", "4q + 1", "5q + 1", "6q + 1"},
    {"q^2 + q - 2", "2q^2 + q - 3", "3q^2 + q - 4", "4q^2 + q - 5", "5q^2 + q - 6"},
    {"q^2 - q", "q^3 + q^2 - 2q", "2q^3 + q^2 - 3q", "3q^3 + q^2 - 4q", "4q^3 + q^2 - 5q"},
    {"0", "q^3 - q^2", "q^4 + q^3 - 2q^2", "2q^4 + q^3 - 3q^2", "3q^4 + q^3 - 4q^2"},
    {"0", "0", "q^4 - q^3", "q^5 + q^4 - 2q^3", "2q^5 + q^4 - 3q^3"},
    {"0", "0", "0", "q^5 - q^4", "q^6 + q^5 - 2q^4"},
    {"0", "0", "0", "0", "q^6 - q^5"},
};

}  // namespace kernel_tables
