package sw.models;

public class CallbackMapper {
    public void map(ApiCallback apiCallback) {
        PathItemObject pathItemObject = new PathItemObject();
        pathItemObject.setRef(apiCallback.callbackUrlExpression());
    }
}
