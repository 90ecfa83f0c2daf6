package com.acme.shop;

public class InventoryService {
    private final int capacity;
    private final String warehouse;
    private int reserved;

    public InventoryService(int capacity, String warehouse) {
        this.capacity = capacity;
        this.warehouse = warehouse;
    }

    public boolean reserve(int units) {
        if (reserved + units > capacity) {
            return false;
        }
        reserved += units;
        return true;
    }

    public String warehouseName() {
        return warehouse;
    }
}
