package com.acme.shop;

import org.junit.jupiter.api.Test;

import static org.junit.jupiter.api.Assertions.assertEquals;

class OrderServiceTest {
    @Test
    void placesAndFindsOrder() {
        OrderService service = new OrderService(new InMemoryOrderRepository(), new SmsNotifier());
        service.placeOrder(new Order("T-1", 1.0));
        assertEquals("T-1", service.lookup("T-1").getId());
    }
}
