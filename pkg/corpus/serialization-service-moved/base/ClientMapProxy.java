package com.hazelcast.client.proxy;

public class ClientMapProxy extends ClientMap {
    public Data get(Object key) {
        Data keyData = getSerializationService().toData(key);
        return keyData;
    }
}
