package com.acme.shop;

public class BillingService {
    private PaymentGateway gateway;

    public BillingService(PaymentGateway gateway) {
        this.gateway = gateway;
    }

    public boolean bill(Order order) {
        if (order == null) {
            return false;
        }
        return gateway.charge(order.getTotal());
    }
}
