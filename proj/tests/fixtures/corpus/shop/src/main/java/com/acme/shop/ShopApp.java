package com.acme.shop;

public class ShopApp {
    public static void main(String[] args) {
        OrderService orders = new OrderService(new InMemoryOrderRepository(), new EmailNotifier());
        BillingService billing = new BillingService(new StripeGateway());
        Order order = new Order("A-1", 42.0);
        orders.placeOrder(order);
        if (billing.bill(order)) {
            System.out.println("billed " + order.getId());
        }
    }
}
