#include "fincomp/indicator.hpp"

namespace fincomp {

namespace {

constexpr auto kPositive = Direction::Positive;
constexpr auto kInverse = Direction::Inverse;

} // namespace

IndicatorRegistry IndicatorRegistry::builtin_default() {
    using enum Category;
    std::vector<IndicatorSpec> specs = {
        // Profitability
        {"opm", "Operating Profit Margin", Profitability, kPositive, "percent"},
        {"pat_ttm", "Profit After Tax for Last 12 Months", Profitability, kPositive, "crore"},
        {"roce", "Return on Capital Employed", Profitability, kPositive, "percent"},
        {"ebit_ttm", "Earnings Before Interest and Tax for Last 12 Months", Profitability,
         kPositive, "crore"},
        {"net_profit_ttm", "Net Profit for Last 12 Months", Profitability, kPositive, "crore"},
        {"pe_ratio", "Price to Earnings Ratio", Profitability, kPositive, "ratio"},
        {"roa_ttm", "Return on Assets for Last 12 Months", Profitability, kPositive, "percent"},
        {"roe", "Return on Equity", Profitability, kPositive, "percent"},
        {"earnings_yield", "Earnings Yield", Profitability, kPositive, "percent"},
        {"roic", "Return on Invested Capital", Profitability, kPositive, "percent"},
        {"breakeven_pct", "Break-even Point Percentage", Profitability, kInverse, "percent"},
        // Solvency
        {"debt", "Debt", Solvency, kInverse, "crore"},
        {"debt_to_equity", "Debt to Equity Ratio", Solvency, kInverse, "ratio"},
        {"interest_coverage", "Interest Coverage Ratio", Solvency, kPositive, "ratio"},
        {"debt_to_profit", "Debt to Profit Ratio", Solvency, kInverse, "ratio"},
        {"leverage_ratio", "Leverage Ratio", Solvency, kInverse, "ratio"},
        // Sustainable development
        {"free_cash_flow", "Free Cash Flow", SustainableDevelopment, kPositive, "crore"},
        {"net_cash_flow", "Net Cash Flow", SustainableDevelopment, kPositive, "crore"},
        {"cfo", "Cash Flow from Operations", SustainableDevelopment, kPositive, "crore"},
        {"dividend_payout_pct", "Dividend Payout Percentage", SustainableDevelopment, kPositive,
         "percent"},
        {"capital_employed", "Capital Employed", SustainableDevelopment, kPositive, "crore"},
        {"peg_ratio", "Price to Earnings Growth Ratio", SustainableDevelopment, kPositive,
         "ratio"},
        {"price_to_fcf", "Market Price to Free Cash Flow Ratio", SustainableDevelopment,
         kPositive, "ratio"},
        // Operational
        {"sales_revenue", "Sales Revenue", Operational, kPositive, "crore"},
        {"operating_profit_ttm", "Operating Profit for Last 12 Months", Operational, kPositive,
         "crore"},
        {"equity_capital", "Equity Capital", Operational, kPositive, "crore"},
        {"cwip", "Capital Work in Progress", Operational, kPositive, "crore"},
        {"current_assets", "Current Assets", Operational, kPositive, "crore"},
        {"current_liabilities", "Current Liabilities", Operational, kInverse, "crore"},
        {"total_assets", "Total Assets", Operational, kPositive, "crore"},
        {"working_capital", "Working Capital", Operational, kPositive, "crore"},
        {"inventory", "Inventory", Operational, kPositive, "crore"},
        {"inventory_turnover", "Inventory Turnover Ratio", Operational, kPositive, "ratio"},
        {"quick_ratio", "Quick Ratio", Operational, kPositive, "ratio"},
        {"asset_turnover", "Asset Turnover Ratio", Operational, kPositive, "ratio"},
        {"working_capital_days", "Working Capital Days", Operational, kInverse, "days"},
        {"cash_conversion_cycle", "Cash Conversion Cycle", Operational, kInverse, "days"},
        {"inventory_days", "Number of Inventory Days", Operational, kInverse, "days"},
        {"receivable_days", "Days of Receivables", Operational, kInverse, "days"},
        {"price_to_sales", "Market Price to Sales Ratio", Operational, kPositive, "ratio"},
        {"current_ratio", "Current Ratio", Operational, kPositive, "ratio"},
        {"wc_to_sales_pct", "Working Capital to Sales Percentage", Operational, kPositive,
         "percent"},
        {"leverage_rupees", "Leverage", Operational, kPositive, "rupees"},
        {"intrinsic_value", "Intrinsic Value", Operational, kPositive, "rupees"},
    };
    return IndicatorRegistry(std::move(specs));
}

} // namespace fincomp
