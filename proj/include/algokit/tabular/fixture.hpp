#pragma once

#include <string_view>

namespace algokit::tabular {

/// Twelve-route migration table with the World Bank extract's schema. Kept byte-identical
/// to data/migrations_fixture.csv.
inline constexpr std::string_view migration_fixture_csv = R"csv(origin_country,origin_continent,dest_country,dest_continent,1960,1970,1980,1990,2000
Nigeria,Africa,Ghana,Africa,30000,45000,120000,20000,25000
Ghana,Africa,Nigeria,Africa,90000,150000,210000,60000,95000
Nigeria,Africa,United Kingdom,Europe,12000,20000,35000,60000,88000
Nigeria,Africa,United States,North America,5000,9000,25000,55000,134000
Nigeria,Africa,Cameroon,Africa,40000,42000,51000,47000,62000
Nigeria,Africa,Saudi Arabia,Asia,1000,3000,9000,15000,21000
Ghana,Africa,United Kingdom,Europe,8000,15000,26000,38000,56000
India,Asia,United Kingdom,Europe,160000,310000,390000,400000,467000
Mexico,North America,United States,North America,575000,760000,2199000,4298000,9367000
"Korea, Rep.",Asia,Japan,Asia,580000,610000,660000,680000,630000
Nigeria,Africa,Australia,Oceania,200,400,700,1100,1500
Nigeria,Africa,Brazil,South America,300,500,900,1200,2500
)csv";

}  // namespace algokit::tabular
