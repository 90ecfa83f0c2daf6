package com.acme.shop;

public class ReportService {
    private OrderRepository source;

    public void setSource(OrderRepository source) {
        this.source = source;
    }

    public String describe(String id) {
        Order order = source.findById(id);
        return order == null ? "missing" : order.getId() + " " + order.getTotal();
    }
}
